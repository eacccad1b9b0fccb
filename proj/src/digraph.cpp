#include "fdgen/digraph.hpp"

#include <algorithm>

#include "fdgen/error.hpp"

namespace fdgen {

std::optional<std::string> digraph_violation(std::span<const ComponentCode> components) {
  for (std::size_t i = 1; i < components.size(); ++i) {
    const auto& prev = components[i - 1];
    const auto& cur = components[i];
    if (cur.size() < prev.size())
      return "component sizes must be nondecreasing (component " + std::to_string(i) + ")";
    if (compare_generation_order(cur, prev) < 0)
      return "equal-size components must be in generation order (component " +
             std::to_string(i) + ")";
  }
  return std::nullopt;
}

DigraphCode::DigraphCode(std::vector<ComponentCode> components) : components_(std::move(components)) {
  if (auto why = digraph_violation(components_)) throw InvalidInput(*why);
}

Count DigraphCode::size() const {
  Count n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

Partition partition_of(const DigraphCode& g) {
  Partition p;
  p.reserve(g.components().size());
  for (const auto& c : g.components()) p.push_back(c.size());
  return p;
}

std::strong_ordering compare_digraphs(const DigraphCode& a, const DigraphCode& b) {
  const Partition pa = partition_of(a), pb = partition_of(b);
  if (auto by_n = partition_sum(pa) <=> partition_sum(pb); by_n != 0) return by_n;
  if (auto by_parts = pa <=> pb; by_parts != 0) return by_parts;
  auto ca = a.components(), cb = b.components();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (auto o = compare_generation_order(ca[i], cb[i]); o != 0) return o;
  return std::strong_ordering::equal;
}

DigraphCode cycles_of(const Partition& p) {
  std::vector<ComponentCode> cs;
  cs.reserve(p.size());
  for (Count q : p) cs.push_back(cycle(q));
  return DigraphCode::unchecked(std::move(cs));
}

DigraphCode successor_digraph(const DigraphCode& g) {
  auto cs = g.components();
  for (std::size_t h = cs.size(); h-- > 0;) {
    auto next = successor_component(cs[h]);
    auto* same = std::get_if<SameSize>(&next);
    if (!same) continue;
    std::vector<ComponentCode> out(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(h));
    out.reserve(cs.size());
    out.push_back(same->code);
    const Count size = same->code.size();
    for (std::size_t i = h + 1; i < cs.size(); ++i)
      out.push_back(cs[i].size() == size ? same->code : cycle(cs[i].size()));
    return DigraphCode::unchecked(std::move(out));
  }
  return cycles_of(successor_partition(partition_of(g)));
}

DigraphStream::DigraphStream(Count n) : current_(cycles_of(first_partition(n))), n_(n) {
  if (n == 0) throw InvalidInput("digraph size must be positive");
}

DigraphStream DigraphStream::after(const DigraphCode& start) {
  DigraphStream s(start, start.size());
  s.advance();
  return s;
}

void DigraphStream::advance() {
  if (done_) return;
  current_ = successor_digraph(current_);
  done_ = current_.size() != n_;
}

std::vector<DigraphCode> generate_digraphs(Count n) {
  std::vector<DigraphCode> out;
  for (DigraphStream s(n); !s.done(); s.advance()) out.push_back(s.current());
  return out;
}

}  // namespace fdgen
