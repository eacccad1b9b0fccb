#pragma once

#include <optional>
#include <vector>

#include "fdgen/tree_code.hpp"

namespace fdgen {

/// Integer partition as a nondecreasing sequence of positive parts. The empty
/// partition stands for n = 0.
using Partition = std::vector<Count>;

bool is_valid_partition(const Partition& p);

Count partition_sum(const Partition& p);

/// (1, 1, ..., 1), n times.
Partition first_partition(Count n);

/// Next partition of the same integer in lexicographic order, or nullopt if
/// `p` is (n) or empty.
std::optional<Partition> next_partition_same_n(const Partition& p);

/// Next partition of n, or the first partition of n + 1 after the last one.
Partition successor_partition(const Partition& p);

}  // namespace fdgen
