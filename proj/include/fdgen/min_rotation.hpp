#pragma once

#include <cstddef>
#include <span>

#include "fdgen/tree_code.hpp"

namespace fdgen {

/// Smallest start index of the lexicographically least rotation of `s`,
/// in O(|s|) time and O(1) extra space. Returns 0 for an empty sequence.
std::size_t least_rotation(std::span<const Count> s);

}  // namespace fdgen
