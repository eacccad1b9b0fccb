#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "fdgen/tree_code.hpp"

namespace fdgen {

/// Isomorphism code of a connected functional digraph: the sequence of tree
/// codes rooted along the limit cycle, stored as its least rotation.
///
/// Tree i is rooted at cycle vertex v_i, and the cycle arcs run
/// v_1 -> v_2 -> ... -> v_k -> v_1.
class ComponentCode {
 public:
  /// Validating constructor; throws InvalidInput unless `trees` is nonempty
  /// and is its own least rotation.
  explicit ComponentCode(std::vector<TreeCode> trees);

  static ComponentCode unchecked(std::vector<TreeCode> trees) {
    ComponentCode c;
    c.trees_ = std::move(trees);
    return c;
  }

  std::span<const TreeCode> trees() const { return trees_; }
  std::size_t tree_count() const { return trees_.size(); }
  /// Number of vertices.
  Count size() const;
  bool is_cycle() const;

  friend bool operator==(const ComponentCode&, const ComponentCode&) = default;
  friend std::strong_ordering operator<=>(const ComponentCode& a, const ComponentCode& b) {
    return a.trees_ <=> b.trees_;
  }

 private:
  ComponentCode() = default;
  std::vector<TreeCode> trees_;
};

/// The cycle of length n: the first component on n vertices.
ComponentCode cycle(Count n);

/// True iff the sequence is its own least rotation. Linear in the number of
/// vertices: the trees are flattened as <0> T1 <0> T2 ... <0> Tk and the
/// least rotation of that integer sequence is computed.
bool is_canonical(std::span<const TreeCode> trees);

/// Index of the tree that starts the least rotation of `trees`.
std::size_t least_tree_rotation(std::span<const TreeCode> trees);

/// Lexicographic comparison of the tree sequences.
std::strong_ordering compare_components(const ComponentCode& a, const ComponentCode& b);

/// Unmerges the leftmost nontrivial tree in place. The result is canonical and
/// has strictly more trees. Throws InvalidInput on a cycle.
ComponentCode cunmerge(const ComponentCode& c);

/// All canonical one-window merges M of `c` with cunmerge(M) == c, sorted
/// increasingly and without duplicates.
std::vector<ComponentCode> merges(const ComponentCode& c);

struct SameSize {
  ComponentCode code;
};
struct GrewTo {
  ComponentCode code;
};
using ComponentSuccessor = std::variant<SameSize, GrewTo>;

/// Counters filled in by successor_component for instrumentation.
struct SuccessorTrace {
  /// Iterations of the walk up through component-unmerges.
  std::size_t unmerge_steps = 0;
};

/// Next component in generation order. Yields GrewTo(cycle(n + 1)) after the
/// last component on n vertices.
ComponentSuccessor successor_component(const ComponentCode& c);
ComponentSuccessor successor_component(const ComponentCode& c, SuccessorTrace& trace);

/// Streams all components on n vertices in generation order, holding only the
/// current one.
///
///     for (ComponentStream s(n); !s.done(); s.advance()) use(s.current());
class ComponentStream {
 public:
  explicit ComponentStream(Count n);
  /// Starts right after `start` (exclusive).
  static ComponentStream after(const ComponentCode& start);

  bool done() const { return done_; }
  const ComponentCode& current() const { return current_; }
  void advance();

 private:
  ComponentStream(ComponentCode c, bool done) : current_(std::move(c)), done_(done) {}
  ComponentCode current_;
  bool done_ = false;
};

std::vector<ComponentCode> generate_components(Count n);

/// Generation-order comparison of two canonical components. Components with
/// fewer vertices come first. For equal sizes the generation order is the
/// preorder of the tree whose parent map is cunmerge, rooted at the cycle,
/// with children visited in increasing lexicographic order; comparing the
/// two ancestor chains decides the order in polynomial time.
std::strong_ordering compare_generation_order(const ComponentCode& a, const ComponentCode& b);

/// 0-based index of `c` in generate_components(c.size()), by replaying the
/// stream. Exponential in the worst case; meant for validation and tests.
std::size_t generation_rank(const ComponentCode& c);

}  // namespace fdgen
