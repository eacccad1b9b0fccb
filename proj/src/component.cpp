#include "fdgen/component.hpp"

#include <algorithm>
#include <cassert>

#include "fdgen/error.hpp"
#include "fdgen/min_rotation.hpp"

namespace fdgen {

namespace {

// <0> T1 <0> T2 ... <0> Tk. Zero is below every entry of a tree code, so the
// least rotation of this sequence starts at the separator of the least
// rotation of the trees.
void flatten_into(std::span<const TreeCode> trees, std::vector<Count>& out) {
  std::size_t total = trees.size();
  for (const TreeCode& t : trees) total += t.size();
  out.clear();
  out.reserve(total);
  for (const TreeCode& t : trees) {
    out.push_back(0);
    out.insert(out.end(), t.seq().begin(), t.seq().end());
  }
}

// Component-unmerge on the flattened form. Returns false if every tree is
// trivial.
bool flat_cunmerge(std::span<const Count> flat, std::vector<Count>& out) {
  std::size_t p = 1;
  while (p < flat.size() && flat[p] == 1) p += 2;
  if (p >= flat.size()) return false;
  const std::size_t end = p + flat[p];
  out.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p));
  out.push_back(1);
  for (std::size_t q = p + 1; q < end; q += flat[q]) {
    out.push_back(0);
    out.insert(out.end(), flat.begin() + static_cast<std::ptrdiff_t>(q),
               flat.begin() + static_cast<std::ptrdiff_t>(q + flat[q]));
  }
  out.insert(out.end(), flat.begin() + static_cast<std::ptrdiff_t>(end), flat.end());
  return true;
}

}  // namespace

ComponentCode::ComponentCode(std::vector<TreeCode> trees) : trees_(std::move(trees)) {
  if (trees_.empty()) throw InvalidInput("a component needs at least one tree");
  if (!is_canonical(trees_))
    throw InvalidInput("tree sequence is not its own least rotation");
}

Count ComponentCode::size() const {
  Count n = 0;
  for (const TreeCode& t : trees_) n += t.size();
  return n;
}

bool ComponentCode::is_cycle() const {
  return std::all_of(trees_.begin(), trees_.end(), [](const TreeCode& t) { return t.is_trivial(); });
}

ComponentCode cycle(Count n) {
  if (n == 0) throw InvalidInput("cycle length must be positive");
  return ComponentCode::unchecked(std::vector<TreeCode>(n));
}

std::size_t least_tree_rotation(std::span<const TreeCode> trees) {
  std::vector<Count> flat;
  flatten_into(trees, flat);
  const std::size_t start = least_rotation(flat);
  // Map the separator position back to a tree index.
  std::size_t pos = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (pos == start) return i;
    pos += 1 + trees[i].size();
  }
  assert(false && "least rotation must start on a separator");
  return 0;
}

bool is_canonical(std::span<const TreeCode> trees) {
  std::vector<Count> flat;
  flatten_into(trees, flat);
  return least_rotation(flat) == 0;
}

std::strong_ordering compare_components(const ComponentCode& a, const ComponentCode& b) {
  return a <=> b;
}

ComponentCode cunmerge(const ComponentCode& c) {
  auto trees = c.trees();
  auto h = std::find_if(trees.begin(), trees.end(), [](const TreeCode& t) { return !t.is_trivial(); });
  if (h == trees.end()) throw InvalidInput("cunmerge of a cycle is undefined");
  std::vector<TreeCode> out(trees.begin(), h);
  auto pieces = unmerge(*h);
  out.insert(out.end(), std::make_move_iterator(pieces.begin()), std::make_move_iterator(pieces.end()));
  out.insert(out.end(), h + 1, trees.end());
  auto result = ComponentCode::unchecked(std::move(out));
  assert(is_canonical(result.trees()));
  return result;
}

std::vector<ComponentCode> merges(const ComponentCode& c) {
  auto trees = c.trees();
  const std::size_t k = trees.size();
  std::vector<Count> flat_c, candidate, undone;
  flatten_into(trees, flat_c);

  // Offsets of each tree's separator inside flat_c.
  std::vector<std::size_t> offset(k + 1);
  for (std::size_t i = 0; i < k; ++i) offset[i + 1] = offset[i] + 1 + trees[i].size();

  std::vector<ComponentCode> out;
  for (std::size_t l = 0; l < k; ++l) {
    if (!trees[l].is_trivial()) continue;
    std::size_t merged_size = 1;
    for (std::size_t r = l + 1; r < k; ++r) {
      if (trees[r] < trees[r - 1]) break;
      merged_size += trees[r].size();

      // C_{l,r}: prefix, merged tree, suffix.
      candidate.assign(flat_c.begin(), flat_c.begin() + static_cast<std::ptrdiff_t>(offset[l]));
      candidate.push_back(0);
      candidate.push_back(static_cast<Count>(merged_size));
      for (std::size_t i = l + 1; i <= r; ++i)
        candidate.insert(candidate.end(), trees[i].seq().begin(), trees[i].seq().end());
      candidate.insert(candidate.end(), flat_c.begin() + static_cast<std::ptrdiff_t>(offset[r + 1]),
                       flat_c.end());

      if (!flat_cunmerge(candidate, undone) || undone != flat_c) continue;
      if (least_rotation(candidate) != 0) continue;

      std::vector<TreeCode> m(trees.begin(), trees.begin() + static_cast<std::ptrdiff_t>(l));
      m.push_back(merge(trees.subspan(l, r - l + 1)));
      m.insert(m.end(), trees.begin() + static_cast<std::ptrdiff_t>(r + 1), trees.end());
      out.push_back(ComponentCode::unchecked(std::move(m)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ComponentSuccessor successor_component(const ComponentCode& c, SuccessorTrace& trace) {
#ifndef NDEBUG
  if (!is_canonical(c.trees())) throw InvalidInput("successor_component needs a canonical component");
#endif
  trace = {};
  auto own = merges(c);
  if (!own.empty()) return SameSize{std::move(own.front())};

  ComponentCode current = c;
  while (!current.is_cycle()) {
    ++trace.unmerge_steps;
    ComponentCode parent = cunmerge(current);
    auto siblings = merges(parent);
    auto next = std::upper_bound(siblings.begin(), siblings.end(), current);
    if (next != siblings.end()) return SameSize{std::move(*next)};
    current = std::move(parent);
  }
  return GrewTo{cycle(c.size() + 1)};
}

ComponentSuccessor successor_component(const ComponentCode& c) {
  SuccessorTrace trace;
  return successor_component(c, trace);
}

ComponentStream::ComponentStream(Count n) : current_(cycle(n)) {}

ComponentStream ComponentStream::after(const ComponentCode& start) {
  ComponentStream s(start, false);
  s.advance();
  return s;
}

void ComponentStream::advance() {
  if (done_) return;
  auto next = successor_component(current_);
  if (auto* same = std::get_if<SameSize>(&next))
    current_ = std::move(same->code);
  else
    done_ = true;
}

std::vector<ComponentCode> generate_components(Count n) {
  std::vector<ComponentCode> out;
  for (ComponentStream s(n); !s.done(); s.advance()) out.push_back(s.current());
  return out;
}

namespace {

// c, cunmerge(c), ..., cycle, reversed so the cycle comes first.
std::vector<ComponentCode> ancestry(const ComponentCode& c) {
  std::vector<ComponentCode> chain{c};
  while (!chain.back().is_cycle()) chain.push_back(cunmerge(chain.back()));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

std::strong_ordering compare_generation_order(const ComponentCode& a, const ComponentCode& b) {
  if (auto by_size = a.size() <=> b.size(); by_size != 0) return by_size;
  if (a == b) return std::strong_ordering::equal;
  const auto chain_a = ancestry(a);
  const auto chain_b = ancestry(b);
  std::size_t i = 0;
  while (i < chain_a.size() && i < chain_b.size() && chain_a[i] == chain_b[i]) ++i;
  // A proper ancestor is visited before its descendants.
  if (i == chain_a.size()) return std::strong_ordering::less;
  if (i == chain_b.size()) return std::strong_ordering::greater;
  return chain_a[i] <=> chain_b[i];
}

std::size_t generation_rank(const ComponentCode& c) {
  if (!is_canonical(c.trees())) throw InvalidInput("generation_rank needs a canonical component");
  std::size_t rank = 0;
  for (ComponentStream s(c.size()); !s.done(); s.advance(), ++rank)
    if (s.current() == c) return rank;
  throw InvalidInput("component not found in its generation stream");
}

}  // namespace fdgen
