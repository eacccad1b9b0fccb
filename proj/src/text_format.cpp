#include "fdgen/text_format.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <variant>

#include "fdgen/error.hpp"

namespace fdgen {

namespace {

void append(std::string& out, const TreeCode& t) {
  out += '[';
  bool first = true;
  for (Count x : t.seq()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(x);
  }
  out += ']';
}

void append(std::string& out, const ComponentCode& c) {
  out += '[';
  for (std::size_t i = 0; i < c.trees().size(); ++i) {
    if (i > 0) out += ',';
    append(out, c.trees()[i]);
  }
  out += ']';
}

// Nested lists of nonnegative integers; leaves and lists never mix.
struct Node {
  std::variant<std::vector<std::uint64_t>, std::vector<Node>> value;
};

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  Node document() {
    Node n = list();
    if (pos_ != s_.size()) fail("trailing characters");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Node list() {
    expect('[');
    if (peek(']')) {
      ++pos_;
      return Node{std::vector<Node>{}};
    }
    if (peek('[')) {
      std::vector<Node> items;
      do items.push_back(list());
      while (comma());
      expect(']');
      return Node{std::move(items)};
    }
    std::vector<std::uint64_t> ints;
    do ints.push_back(number());
    while (comma());
    expect(']');
    return Node{std::move(ints)};
  }

  bool comma() {
    if (!peek(',')) return false;
    ++pos_;
    return true;
  }

  std::uint64_t number() {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + pos_) fail("expected a nonnegative integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

TreeCode to_tree(const Node& n, const std::string& where) {
  const auto* ints = std::get_if<std::vector<std::uint64_t>>(&n.value);
  if (!ints) throw InvalidInput(where + "expected a list of integers");
  std::vector<std::int64_t> raw;
  for (std::uint64_t x : *ints) {
    if (x > std::numeric_limits<Count>::max()) throw InvalidInput(where + "integer too large");
    raw.push_back(static_cast<std::int64_t>(x));
  }
  if (!is_valid_tree_code(raw)) throw InvalidInput(where + "not a valid tree code");
  return TreeCode::unchecked({raw.begin(), raw.end()});
}

const std::vector<Node>& sublists(const Node& n, const std::string& where) {
  const auto* items = std::get_if<std::vector<Node>>(&n.value);
  if (!items) throw InvalidInput(where + "expected a list of lists");
  return *items;
}

ComponentCode to_component(const Node& n, const std::string& where) {
  const auto& items = sublists(n, where);
  if (items.empty()) throw InvalidInput(where + "a component needs at least one tree");
  std::vector<TreeCode> trees;
  for (std::size_t i = 0; i < items.size(); ++i)
    trees.push_back(to_tree(items[i], where + "tree " + std::to_string(i) + ": "));
  if (!is_canonical(trees)) throw InvalidInput(where + "not the least rotation of its trees");
  return ComponentCode::unchecked(std::move(trees));
}

}  // namespace

std::string render(const TreeCode& t) {
  std::string out;
  append(out, t);
  return out;
}

std::string render(const ComponentCode& c) {
  std::string out;
  append(out, c);
  return out;
}

std::string render(const DigraphCode& g) {
  std::string out = "[";
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    if (i > 0) out += ',';
    append(out, g.components()[i]);
  }
  out += ']';
  return out;
}

TreeCode parse_tree(std::string_view text) { return to_tree(Reader(text).document(), ""); }

ComponentCode parse_component(std::string_view text) {
  return to_component(Reader(text).document(), "");
}

DigraphCode parse_digraph(std::string_view text) {
  const Node doc = Reader(text).document();
  std::vector<ComponentCode> cs;
  for (const Node& item : sublists(doc, ""))
    cs.push_back(to_component(item, "component " + std::to_string(cs.size()) + ": "));
  if (auto why = digraph_violation(cs)) throw InvalidInput(*why);
  return DigraphCode::unchecked(std::move(cs));
}

FunctionTable parse_table(std::string_view line) {
  std::vector<Vertex> f;
  std::size_t pos = 0;
  while (true) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == line.size()) break;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
    if (ec != std::errc() || ptr == line.data() + pos)
      throw InvalidInput("expected a nonnegative integer at column " + std::to_string(pos + 1));
    if (v > std::numeric_limits<Vertex>::max()) throw InvalidInput("entry too large");
    f.push_back(static_cast<Vertex>(v));
    pos = static_cast<std::size_t>(ptr - line.data());
    if (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
      throw InvalidInput("unexpected character at column " + std::to_string(pos + 1));
  }
  return FunctionTable(std::move(f));
}

}  // namespace fdgen
