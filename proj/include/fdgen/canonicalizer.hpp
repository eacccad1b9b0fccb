#pragma once

#include <cstdint>
#include <vector>

#include "fdgen/digraph.hpp"

namespace fdgen {

using Vertex = std::uint32_t;

/// Explicit endofunction on {0, ..., n-1}; entry i is f(i).
class FunctionTable {
 public:
  FunctionTable() = default;
  /// Throws InvalidInput if some entry is out of range.
  explicit FunctionTable(std::vector<Vertex> f);

  std::size_t size() const { return f_.size(); }
  Vertex operator[](std::size_t i) const { return f_[i]; }
  const std::vector<Vertex>& values() const { return f_; }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  std::vector<Vertex> f_;
};

/// One connected component: its limit cycle listed along the arcs
/// (f(cycle[i]) == cycle[i + 1]), starting at its smallest vertex.
struct RawComponent {
  std::vector<Vertex> cycle;
};

struct Decomposition {
  std::vector<RawComponent> components;  // ordered by smallest cycle vertex
  /// predecessors[v]: vertices u off the cycles with f(u) == v, ascending.
  std::vector<std::vector<Vertex>> predecessors;
};

Decomposition decompose(const FunctionTable& t);

/// Code of the in-tree rooted at `root`, built from the transient
/// predecessors recorded in `d`.
TreeCode tree_code_of(Vertex root, const Decomposition& d);

/// Least rotation of the trees taken along the cycle.
ComponentCode component_code_of(std::vector<TreeCode> cycle_trees);

DigraphCode canonicalize(const FunctionTable& t);

bool isomorphic(const FunctionTable& a, const FunctionTable& b);

}  // namespace fdgen
