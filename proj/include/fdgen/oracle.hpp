#pragma once

#include <cstddef>
#include <functional>
#include <set>

#include "fdgen/canonicalizer.hpp"

namespace fdgen::oracle {

/// Largest n accepted by the brute-force routines (8^8 tables).
inline constexpr Count max_size = 8;

/// Calls `visit` on each of the n^n tables in odometer order (last entry
/// fastest). Throws InvalidInput unless 1 <= n <= max_size.
void enumerate_tables(Count n, const std::function<void(const FunctionTable&)>& visit);

struct Classification {
  std::set<DigraphCode> digraphs;
  std::set<ComponentCode> components;
};

/// Canonical codes of every digraph on n vertices and of the connected ones.
/// Splits the work by the value of f(0) over up to `threads` workers
/// (0 picks the hardware concurrency).
Classification classify(Count n, unsigned threads = 0);

/// A function table whose canonical code is `g`. Vertices are numbered in
/// preorder, tree by tree along each cycle, component by component.
FunctionTable realize(const DigraphCode& g);

}  // namespace fdgen::oracle
