#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdgen/component.hpp"
#include "fdgen/partition.hpp"

namespace fdgen {

/// Isomorphism code of an arbitrary functional digraph: its components sorted
/// by size, and among equal sizes by generation order. Empty for the empty
/// digraph.
class DigraphCode {
 public:
  DigraphCode() = default;
  /// Validating constructor; throws InvalidInput naming the violated rule.
  explicit DigraphCode(std::vector<ComponentCode> components);

  static DigraphCode unchecked(std::vector<ComponentCode> components) {
    DigraphCode g;
    g.components_ = std::move(components);
    return g;
  }

  std::span<const ComponentCode> components() const { return components_; }
  Count size() const;
  bool empty() const { return components_.empty(); }

  friend bool operator==(const DigraphCode&, const DigraphCode&) = default;
  /// Plain structural (lexicographic) order, used for set keys. The
  /// enumeration order is compare_digraphs.
  friend std::strong_ordering operator<=>(const DigraphCode& a, const DigraphCode& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<ComponentCode> components_;
};

/// Describes the first violated DigraphCode invariant, or nullopt if none.
std::optional<std::string> digraph_violation(std::span<const ComponentCode> components);

Partition partition_of(const DigraphCode& g);

/// Enumeration order: partitions in successor_partition order (smaller totals
/// first), then component sequences lexicographically by generation order.
std::strong_ordering compare_digraphs(const DigraphCode& a, const DigraphCode& b);

/// One self-loop per part of `p`, replaced by the cycle of that length.
DigraphCode cycles_of(const Partition& p);

/// Immediate successor in enumeration order. The successor of the empty
/// digraph is a single self-loop.
DigraphCode successor_digraph(const DigraphCode& g);

/// Streams all digraphs on n vertices in enumeration order.
class DigraphStream {
 public:
  explicit DigraphStream(Count n);
  /// Starts right after `start` (exclusive).
  static DigraphStream after(const DigraphCode& start);

  bool done() const { return done_; }
  const DigraphCode& current() const { return current_; }
  void advance();

 private:
  DigraphStream(DigraphCode g, Count n) : current_(std::move(g)), n_(n) {}
  DigraphCode current_;
  Count n_ = 0;
  bool done_ = false;
};

std::vector<DigraphCode> generate_digraphs(Count n);

}  // namespace fdgen
