// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   fdgen_acceptance <path-to-fdgen-binary>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fdgen/delay.hpp"
#include "fdgen/oracle.hpp"
#include "fdgen/text_format.hpp"
#include "golden.hpp"
#include "naive.hpp"

using namespace fdgen;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

template <typename Code>
Outcome golden_cli(const std::string& binary, const std::string& args, const std::vector<Code>& expected) {
  Outcome o;
  const auto t0 = Clock::now();
  int status = 0;
  const std::string out = run_command(binary + " " + args, status);
  const double dt = seconds_since(t0);
  std::string want;
  for (const auto& c : expected) want += render(c) + "\n";
  if (status != 0) o.fail("exit status " + std::to_string(status));
  if (out != want) o.fail("output differs:\n" + out);
  if (dt >= 1.0) o.fail("took " + std::to_string(dt) + " s");
  o.detail = o.pass ? std::to_string(expected.size()) + " codes in " + std::to_string(dt) + " s" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::size_t> components{1, 2, 4, 9, 20, 51, 125};
  const std::vector<std::size_t> digraphs{1, 3, 7, 19, 47, 130, 343};
  for (Count n = 1; n <= 7; ++n) {
    const auto truth = oracle::classify(n);
    const auto cs = generate_components(n);
    const auto gs = generate_digraphs(n);
    const std::set<ComponentCode> cset(cs.begin(), cs.end());
    const std::set<DigraphCode> gset(gs.begin(), gs.end());
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (cset.size() != cs.size()) o.fail(at + "duplicate component");
    if (gset.size() != gs.size()) o.fail(at + "duplicate digraph");
    if (cset != truth.components) o.fail(at + "component set differs from oracle");
    if (gset != truth.digraphs) o.fail(at + "digraph set differs from oracle");
    if (cs.size() != components[n - 1]) o.fail(at + "component count " + std::to_string(cs.size()));
    if (gs.size() != digraphs[n - 1]) o.fail(at + "digraph count " + std::to_string(gs.size()));
  }
  const double dt = seconds_since(t0);
  if (dt > 300) o.fail("took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = "n=1..7 exact, " + std::to_string(dt) + " s";
  return o;
}

Outcome structural_lemmas() {
  Outcome o;
  std::size_t checked = 0, worst_walk = 0;
  for (Count n = 1; n <= 7; ++n) {
    std::map<ComponentCode, ComponentCode> owner;
    for (const auto& c : generate_components(n)) {
      ++checked;
      if (!is_canonical(c.trees())) o.fail("non-canonical output " + render(c));
      for (const auto& m : merges(c)) {
        if (cunmerge(m) != c) o.fail("cunmerge(M) != C for M=" + render(m));
        if (!owner.emplace(m, c).second) o.fail("merge sets overlap at " + render(m));
      }
      SuccessorTrace trace;
      successor_component(c, trace);
      worst_walk = std::max(worst_walk, trace.unmerge_steps);
    }
  }
  if (worst_walk > 2) o.fail("unmerge walk ran " + std::to_string(worst_walk) + " times");
  for (Count n = 2; n <= 10; ++n) {
    std::vector<Count> star(n, 1);
    star[0] = n;
    const auto ms = merges(cycle(n));
    if (ms.empty() || ms.back() != ComponentCode({TreeCode(star)}))
      o.fail("max merges of cycle(" + std::to_string(n) + ")");
  }
  if (o.pass)
    o.detail = std::to_string(checked) + " components, worst unmerge walk " + std::to_string(worst_walk);
  return o;
}

// Median of `reps` timings of is_canonical on `trees`.
double time_canonical(const std::vector<TreeCode>& trees, int reps) {
  std::vector<double> samples;
  volatile bool sink = false;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    sink = sink ^ is_canonical(trees);
    samples.push_back(seconds_since(t0));
  }
  std::nth_element(samples.begin(), samples.begin() + reps / 2, samples.end());
  return samples[static_cast<std::size_t>(reps / 2)];
}

Outcome min_rotation() {
  Outcome o;
  std::vector<TreeCode> all;
  for (Count m = 1; m <= 7; ++m)
    for (const auto& s : naive::all_trees(m)) all.emplace_back(s);
  std::size_t checked = 0;
  std::vector<TreeCode> seq;
  std::function<void(Count)> rec = [&](Count total) {
    if (!seq.empty()) {
      ++checked;
      if (is_canonical(seq) != naive::is_min_rotation(seq)) o.fail("disagreement on a sequence of " + std::to_string(seq.size()) + " trees");
    }
    for (const auto& t : all) {
      if (total + t.size() > 7) continue;
      seq.push_back(t);
      rec(total + t.size());
      seq.pop_back();
    }
  };
  rec(0);

  // Flattened length is twice the tree count for trivial trees; the second
  // family mixes a long prefix of equal blocks with one late difference,
  // which is where quadratic rotation checks blow up.
  auto family = [](std::size_t flat_len, int kind) {
    std::vector<TreeCode> ts;
    if (kind == 0) return std::vector<TreeCode>(flat_len / 2);
    const TreeCode pair({2, 1});
    while (ts.size() * 3 + 2 < flat_len) ts.push_back(pair);
    ts.insert(ts.begin(), TreeCode());
    return ts;
  };
  double worst_ratio = 0;
  for (int kind = 0; kind < 2; ++kind) {
    const auto small = family(10000, kind);
    const auto large = family(20000, kind);
    time_canonical(large, 5);  // warm up
    const double ratio = time_canonical(large, 41) / time_canonical(small, 41);
    worst_ratio = std::max(worst_ratio, ratio);
  }
  if (worst_ratio > 2.5) o.fail("doubling ratio " + std::to_string(worst_ratio));
  if (o.pass)
    o.detail = std::to_string(checked) + " sequences agree, doubling ratio " + std::to_string(worst_ratio);
  return o;
}

Outcome partitions() {
  Outcome o;
  for (Count n = 1; n <= 12; ++n) {
    std::vector<Partition> seen;
    Partition p = first_partition(n);
    while (partition_sum(p) == n) {
      seen.push_back(p);
      p = successor_partition(p);
    }
    if (seen != naive::partitions(n)) o.fail("partition list differs at n=" + std::to_string(n));
    if (p != first_partition(n + 1)) o.fail("wrap differs at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=1..12 exact including wrap";
  return o;
}

Outcome canonicalizer() {
  Outcome o;
  for (Count n = 1; n <= 5; ++n) {
    std::map<naive::Seq, DigraphCode> by_brute;
    std::map<DigraphCode, naive::Seq> by_code;
    oracle::enumerate_tables(n, [&](const FunctionTable& t) {
      const auto brute = naive::brute_canonical_table(t.values());
      const auto code = canonicalize(t);
      if (by_brute.emplace(brute, code).first->second != code) o.fail("isomorphic tables got different codes");
      if (by_code.emplace(code, brute).first->second != brute) o.fail("non-isomorphic tables share a code");
    });
  }
  std::mt19937_64 rng(20231015);
  const Vertex n = 8;
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<Vertex> f(n), p(n), g(n);
    for (auto& x : f) x = static_cast<Vertex>(rng() % n);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    for (Vertex i = 0; i < n; ++i) g[p[i]] = p[f[i]];
    if (canonicalize(FunctionTable(f)) != canonicalize(FunctionTable(g))) o.fail("relabeling changed the code");
  }
  if (o.pass) o.detail = "n<=5 exhaustive, 10000 relabelings at n=8";
  return o;
}

Outcome delay() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<DelayStats> stats;
  std::ostringstream detail;
  for (Count n : {8u, 16u, 32u, 64u}) {
    stats.push_back(measure_component_delay(n, 10000));
    detail << "n=" << n << " max=" << stats.back().max_seconds * 1e6 << "us ";
  }
  const auto slope = loglog_slope(stats);
  const double dt = seconds_since(t0);
  if (!slope) o.fail("slope undefined");
  else if (*slope > 3.5) o.fail("slope " + std::to_string(*slope));
  if (dt > 120) o.fail("took " + std::to_string(dt) + " s");
  detail << "slope=" << (slope ? std::to_string(*slope) : "n/a") << " in " << dt << " s";
  if (o.pass) o.detail = detail.str();
  else o.detail += " (" + detail.str() + ")";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: fdgen_acceptance <path-to-fdgen>\n";
    return 2;
  }
  const std::string binary = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 golden n=4 connected sequence",
       [&] { return golden_cli(binary, "gen --connected -n 4", golden::components4()); }},
      {"2 golden n=4 digraph sequence", [&] { return golden_cli(binary, "gen -n 4", golden::digraphs4()); }},
      {"3 oracle equivalence n<=7", oracle_equivalence},
      {"4 structural lemma suite", structural_lemmas},
      {"5 minimal-rotation correctness and linearity", min_rotation},
      {"6 partition generator", partitions},
      {"7 canonicalizer soundness", canonicalizer},
      {"8 empirical delay slope", delay},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << o.detail << std::endl;
    failures += !o.pass;
  }
  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
