#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace fdgen {

using Count = std::uint32_t;

/// Isomorphism code of a rooted unordered tree with arcs toward the root.
///
/// The code is the flat sequence <|T|> followed by the codes of the immediate
/// subtrees in lexicographically nondecreasing order. The trivial tree is <1>.
/// Subtree boundaries are recovered by reading the size prefix.
class TreeCode {
 public:
  /// The trivial tree <1>.
  TreeCode() : seq_{1} {}

  /// Validating constructor; throws InvalidInput if `seq` is not a tree code.
  explicit TreeCode(std::vector<Count> seq);

  /// Wraps `seq` without validation. Callers guarantee the invariants.
  static TreeCode unchecked(std::vector<Count> seq) {
    TreeCode t;
    t.seq_ = std::move(seq);
    return t;
  }

  Count size() const { return seq_.front(); }
  bool is_trivial() const { return seq_.front() == 1; }
  std::span<const Count> seq() const { return seq_; }

  /// Codes of the immediate subtrees, in stored (nondecreasing) order.
  std::vector<TreeCode> subtrees() const;

  friend bool operator==(const TreeCode&, const TreeCode&) = default;
  friend std::strong_ordering operator<=>(const TreeCode& a, const TreeCode& b) {
    return a.seq_ <=> b.seq_;
  }

 private:
  std::vector<Count> seq_;
};

/// True iff `s` satisfies every tree-code invariant. Total on any input.
bool is_valid_tree_code(std::span<const std::int64_t> s);
bool is_valid_tree_code(std::span<const Count> s);

inline Count tree_size(const TreeCode& t) { return t.size(); }

/// Lexicographic comparison; a proper prefix precedes its extensions.
std::strong_ordering compare_trees(const TreeCode& a, const TreeCode& b);

/// Attaches ts[1..] as immediate subtrees of the trivial ts[0].
/// Requires ts.size() >= 2, ts[0] trivial and ts nondecreasing.
TreeCode merge(std::span<const TreeCode> ts);

/// The unique inverse of merge: <1> followed by the immediate subtrees.
/// Requires a nontrivial tree.
std::vector<TreeCode> unmerge(const TreeCode& t);

}  // namespace fdgen
