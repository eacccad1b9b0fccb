#include "fdgen/min_rotation.hpp"

#include <algorithm>

namespace fdgen {

// Two-candidate scan: i and j are the best start positions not yet ruled out,
// k the length of their common prefix. A mismatch at offset k rules out the
// worse candidate together with the k positions following it.
std::size_t least_rotation(std::span<const Count> s) {
  const std::size_t n = s.size();
  // Positions i + k and j + k never exceed 2n, so one subtraction wraps them.
  auto at = [&](std::size_t p) { return s[p < n ? p : p - n]; };
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Count a = at(i + k);
    const Count b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

}  // namespace fdgen
