#include "fdgen/tree_code.hpp"

#include <algorithm>
#include <string>

#include "fdgen/error.hpp"

namespace fdgen {

namespace {

// Iterative so that path-like trees with very many vertices do not exhaust
// the call stack. A tree with m vertices occupies exactly m positions.
template <typename T>
bool validate(std::span<const T> s) {
  if (s.empty()) return false;
  struct Frame {
    std::size_t begin, end;
    std::size_t prev_begin, prev_end;  // last closed child, empty if none
  };
  const std::size_t n = s.size();
  std::vector<Frame> stack;

  auto open = [&](std::size_t pos, std::size_t limit) {
    const T size = s[pos];
    if (size < 1 || static_cast<std::size_t>(size) > limit - pos) return false;
    stack.push_back({pos, pos + static_cast<std::size_t>(size), 0, 0});
    return true;
  };

  if (!open(0, n)) return false;
  std::size_t pos = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (pos == top.end) {
      const std::size_t b = top.begin, e = top.end;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& parent = stack.back();
      if (parent.prev_end != parent.prev_begin) {
        auto prev = s.subspan(parent.prev_begin, parent.prev_end - parent.prev_begin);
        auto cur = s.subspan(b, e - b);
        if (std::lexicographical_compare(cur.begin(), cur.end(), prev.begin(), prev.end()))
          return false;
      }
      parent.prev_begin = b;
      parent.prev_end = e;
      continue;
    }
    if (!open(pos, top.end)) return false;
    ++pos;
  }
  return pos == n;
}

}  // namespace

TreeCode::TreeCode(std::vector<Count> seq) : seq_(std::move(seq)) {
  if (!validate(std::span<const Count>(seq_)))
    throw InvalidInput("not a valid tree code");
}

std::vector<TreeCode> TreeCode::subtrees() const {
  std::vector<TreeCode> out;
  std::size_t pos = 1;
  while (pos < seq_.size()) {
    const std::size_t len = seq_[pos];
    out.push_back(unchecked({seq_.begin() + pos, seq_.begin() + pos + len}));
    pos += len;
  }
  return out;
}

bool is_valid_tree_code(std::span<const std::int64_t> s) { return validate(s); }
bool is_valid_tree_code(std::span<const Count> s) { return validate(s); }

std::strong_ordering compare_trees(const TreeCode& a, const TreeCode& b) { return a <=> b; }

TreeCode merge(std::span<const TreeCode> ts) {
  if (ts.size() < 2) throw InvalidInput("merge needs at least two trees");
  if (!ts.front().is_trivial()) throw InvalidInput("merge needs a trivial first tree");
  std::size_t total = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0 && ts[i] < ts[i - 1])
      throw InvalidInput("merge needs a nondecreasing window, violated at position " +
                         std::to_string(i));
    total += ts[i].size();
  }
  std::vector<Count> seq;
  seq.reserve(total);
  seq.push_back(static_cast<Count>(total));
  for (const TreeCode& t : ts.subspan(1)) seq.insert(seq.end(), t.seq().begin(), t.seq().end());
  return TreeCode::unchecked(std::move(seq));
}

std::vector<TreeCode> unmerge(const TreeCode& t) {
  if (t.is_trivial()) throw InvalidInput("cannot unmerge the trivial tree");
  std::vector<TreeCode> out{TreeCode()};
  auto subs = t.subtrees();
  out.insert(out.end(), std::make_move_iterator(subs.begin()), std::make_move_iterator(subs.end()));
  return out;
}

}  // namespace fdgen
