#include "fdgen/partition.hpp"

#include <algorithm>
#include <numeric>

namespace fdgen {

bool is_valid_partition(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](Count x) { return x > 0; }) &&
         std::is_sorted(p.begin(), p.end());
}

Count partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), Count{0}); }

Partition first_partition(Count n) { return Partition(n, 1); }

// Ascending-composition successor: bump the second-to-last part by one and
// redistribute what remains of the last part as copies of the new value, the
// final part absorbing the remainder.
std::optional<Partition> next_partition_same_n(const Partition& p) {
  if (p.size() < 2) return std::nullopt;
  Partition q(p.begin(), p.end() - 2);
  Count x = p[p.size() - 2] + 1;
  Count y = p.back() - 1;
  while (x <= y) {
    q.push_back(x);
    y -= x;
  }
  q.push_back(x + y);
  return q;
}

Partition successor_partition(const Partition& p) {
  if (auto next = next_partition_same_n(p)) return *std::move(next);
  return first_partition(partition_sum(p) + 1);
}

}  // namespace fdgen
