#include "fdgen/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fdgen/delay.hpp"
#include "fdgen/error.hpp"
#include "fdgen/oracle.hpp"
#include "fdgen/text_format.hpp"

namespace fdgen::cli {

namespace {

enum class Format { text, json };

nlohmann::json to_json(const TreeCode& t) { return nlohmann::json(std::vector<Count>(t.seq().begin(), t.seq().end())); }

nlohmann::json to_json(const ComponentCode& c) {
  auto arr = nlohmann::json::array();
  for (const TreeCode& t : c.trees()) arr.push_back(to_json(t));
  return arr;
}

nlohmann::json to_json(const DigraphCode& g) {
  auto arr = nlohmann::json::array();
  for (const ComponentCode& c : g.components()) arr.push_back(to_json(c));
  return arr;
}

template <typename Code>
void emit(std::ostream& out, const Code& code, Format format) {
  if (format == Format::json)
    out << to_json(code).dump() << '\n';
  else
    out << render(code) << '\n';
}

struct GenOptions {
  Count size = 0;
  bool connected = false;
  std::optional<std::size_t> limit;
  std::optional<std::string> start;
  bool count_only = false;
  Format format = Format::text;
};

template <typename Stream>
int drain(Stream stream, const GenOptions& opt, std::ostream& out) {
  std::size_t emitted = 0;
  for (; !stream.done() && (!opt.limit || emitted < *opt.limit); stream.advance(), ++emitted)
    if (!opt.count_only) emit(out, stream.current(), opt.format);
  if (opt.count_only) out << emitted << '\n';
  out.flush();
  return ok;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.size == 0) {
    err << "gen: size must be at least 1\n";
    return usage;
  }
  try {
    if (opt.connected) {
      if (!opt.start) return drain(ComponentStream(opt.size), opt, out);
      ComponentCode start = parse_component(*opt.start);
      if (start.size() != opt.size)
        throw InvalidInput("start has " + std::to_string(start.size()) + " vertices, expected " +
                           std::to_string(opt.size));
      return drain(ComponentStream::after(start), opt, out);
    }
    if (!opt.start) return drain(DigraphStream(opt.size), opt, out);
    DigraphCode start = parse_digraph(*opt.start);
    if (start.size() != opt.size)
      throw InvalidInput("start has " + std::to_string(start.size()) + " vertices, expected " +
                         std::to_string(opt.size));
    return drain(DigraphStream::after(start), opt, out);
  } catch (const InvalidInput& e) {
    err << "gen: invalid --start: " << e.what() << '\n';
    return usage;
  }
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

int cmd_canon(const std::string& path, bool check_iso, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::ifstream file;
  std::istream* src = &in;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) {
      err << "canon: cannot open " << path << '\n';
      return usage;
    }
    src = &file;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*src, line)) {
    ++lineno;
    if (blank(line)) continue;
    try {
      if (check_iso) {
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
          throw InvalidInput("expected two tables separated by one comma");
        const auto a = parse_table(std::string_view(line).substr(0, comma));
        const auto b = parse_table(std::string_view(line).substr(comma + 1));
        out << (isomorphic(a, b) ? "iso" : "non-iso") << '\n';
      } else {
        out << render(canonicalize(parse_table(line))) << '\n';
      }
    } catch (const InvalidInput& e) {
      err << "canon: line " << lineno << ": " << e.what() << '\n';
      return usage;
    }
  }
  return ok;
}

template <typename Code>
std::optional<Code> first_difference(const std::set<Code>& a, const std::set<Code>& b) {
  for (const Code& c : a)
    if (!b.contains(c)) return c;
  return std::nullopt;
}

int cmd_verify(Count n_max, std::ostream& out, std::ostream& err) {
  if (n_max < 1 || n_max > oracle::max_size) {
    err << "verify: n_max must be in 1.." << oracle::max_size << '\n';
    return usage;
  }
  for (Count n = 1; n <= n_max; ++n) {
    const auto truth = oracle::classify(n);
    std::set<ComponentCode> components;
    std::size_t component_stream = 0;
    for (ComponentStream s(n); !s.done(); s.advance(), ++component_stream) components.insert(s.current());
    std::set<DigraphCode> digraphs;
    std::size_t digraph_stream = 0;
    for (DigraphStream s(n); !s.done(); s.advance(), ++digraph_stream) digraphs.insert(s.current());

    out << "n=" << n << " components=" << component_stream << " digraphs=" << digraph_stream;
    if (component_stream != components.size() || digraph_stream != digraphs.size()) {
      out << " MISMATCH\n";
      err << "verify: n=" << n << ": generator emitted a duplicate\n";
      return mismatch;
    }
    if (auto c = first_difference(truth.components, components)) {
      out << " MISMATCH\n";
      err << "verify: n=" << n << ": component missing from generator: " << render(*c) << '\n';
      return mismatch;
    }
    if (auto c = first_difference(components, truth.components)) {
      out << " MISMATCH\n";
      err << "verify: n=" << n << ": component not found by oracle: " << render(*c) << '\n';
      return mismatch;
    }
    if (auto g = first_difference(truth.digraphs, digraphs)) {
      out << " MISMATCH\n";
      err << "verify: n=" << n << ": digraph missing from generator: " << render(*g) << '\n';
      return mismatch;
    }
    if (auto g = first_difference(digraphs, truth.digraphs)) {
      out << " MISMATCH\n";
      err << "verify: n=" << n << ": digraph not found by oracle: " << render(*g) << '\n';
      return mismatch;
    }
    out << " ok\n";
  }
  return ok;
}

int cmd_bench(const std::vector<Count>& sizes, bool digraphs, std::optional<std::size_t> limit,
              std::ostream& out, std::ostream& err) {
  std::vector<DelayStats> stats;
  for (Count n : sizes) {
    if (n < 1) {
      err << "bench: sizes must be at least 1\n";
      return usage;
    }
    stats.push_back(digraphs ? measure_digraph_delay(n, limit) : measure_component_delay(n, limit));
    const DelayStats& s = stats.back();
    out << "n=" << s.n << " calls=" << s.calls << std::fixed << std::setprecision(3)
        << " max_us=" << s.max_seconds * 1e6 << " mean_us=" << s.mean_seconds * 1e6 << '\n';
  }
  out << "slope=";
  if (auto slope = loglog_slope(stats))
    out << std::fixed << std::setprecision(3) << *slope << '\n';
  else
    out << "n/a\n";
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isomorphism-free generator of functional digraphs", "fdgen"};
  app.require_subcommand(1);

  GenOptions gen;
  std::size_t gen_limit = 0;
  std::string gen_start;
  auto* gen_cmd = app.add_subcommand("gen", "Stream canonical codes in generation order");
  gen_cmd->add_option("-n,--size", gen.size, "Number of vertices")->required();
  gen_cmd->add_flag("--connected", gen.connected, "Connected digraphs only");
  auto* gen_limit_opt = gen_cmd->add_option("--limit", gen_limit, "Stop after this many codes");
  auto* gen_start_opt = gen_cmd->add_option("--start", gen_start, "Resume after this code");
  gen_cmd->add_flag("--count", gen.count_only, "Print only the number of codes");
  std::string gen_format = "text";
  gen_cmd->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string canon_input;
  bool check_iso = false;
  auto* canon_cmd = app.add_subcommand("canon", "Canonical codes of function tables");
  canon_cmd->add_option("input", canon_input, "Input file (default: standard input)");
  canon_cmd->add_flag("--check-iso", check_iso, "Read 'table, table' pairs and print iso/non-iso");

  Count n_max = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the generators with the brute-force oracle");
  verify_cmd->add_option("n_max", n_max, "Largest size to check")->required();

  std::vector<Count> sizes;
  bool bench_digraphs = false;
  std::size_t bench_limit = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Measure the delay between consecutive outputs");
  bench_cmd->add_option("sizes", sizes, "Sizes to measure")->required();
  bench_cmd->add_flag("--digraphs", bench_digraphs, "Time arbitrary digraphs instead of components");
  auto* bench_limit_opt = bench_cmd->add_option("--limit", bench_limit, "Time only this many successors per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }

  if (*gen_cmd) {
    if (*gen_limit_opt) gen.limit = gen_limit;
    if (*gen_start_opt) gen.start = gen_start;
    gen.format = gen_format == "json" ? Format::json : Format::text;
    return cmd_gen(gen, out, err);
  }
  if (*canon_cmd) return cmd_canon(canon_input, check_iso, in, out, err);
  if (*verify_cmd) return cmd_verify(n_max, out, err);
  return cmd_bench(sizes, bench_digraphs, *bench_limit_opt ? std::optional(bench_limit) : std::nullopt, out, err);
}

}  // namespace fdgen::cli
