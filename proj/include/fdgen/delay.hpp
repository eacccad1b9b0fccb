#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "fdgen/tree_code.hpp"

namespace fdgen {

struct DelayStats {
  Count n = 0;
  std::size_t calls = 0;   // timed successor calls
  double max_seconds = 0;  // worst single call
  double mean_seconds = 0;
};

/// Times successor_component on each of the first `limit` components of the
/// size-n stream (all of them if limit is empty). The call that leaves the
/// stream counts too.
DelayStats measure_component_delay(Count n, std::optional<std::size_t> limit);

/// Same for successor_digraph over the size-n digraph stream.
DelayStats measure_digraph_delay(Count n, std::optional<std::size_t> limit);

/// Least-squares slope of log(max_seconds) against log(n). Needs at least two
/// distinct sizes with positive timings.
std::optional<double> loglog_slope(std::span<const DelayStats> stats);

}  // namespace fdgen
