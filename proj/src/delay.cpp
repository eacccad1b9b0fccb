#include "fdgen/delay.hpp"

#include <chrono>
#include <cmath>
#include <set>

#include "fdgen/component.hpp"
#include "fdgen/digraph.hpp"

namespace fdgen {

namespace {

using Clock = std::chrono::steady_clock;

// `step` returns the successor, or nullopt once the stream leaves size n.
template <typename Code, typename Step>
DelayStats measure(Count n, Code current, std::optional<std::size_t> limit, Step step) {
  DelayStats stats{n, 0, 0, 0};
  double total = 0;
  while (!limit || stats.calls < *limit) {
    const auto t0 = Clock::now();
    auto next = step(current);
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    ++stats.calls;
    total += dt;
    stats.max_seconds = std::max(stats.max_seconds, dt);
    if (!next) break;
    current = *std::move(next);
  }
  stats.mean_seconds = stats.calls ? total / static_cast<double>(stats.calls) : 0;
  return stats;
}

}  // namespace

DelayStats measure_component_delay(Count n, std::optional<std::size_t> limit) {
  return measure(
      n, cycle(n), limit,
      [](const ComponentCode& c) {
        auto next = successor_component(c);
        if (auto* same = std::get_if<SameSize>(&next)) return std::optional(std::move(same->code));
        return std::optional<ComponentCode>();
      });
}

DelayStats measure_digraph_delay(Count n, std::optional<std::size_t> limit) {
  return measure(
      n, cycles_of(first_partition(n)), limit,
      [n](const DigraphCode& g) {
        auto next = successor_digraph(g);
        return next.size() == n ? std::optional(std::move(next)) : std::nullopt;
      });
}

std::optional<double> loglog_slope(std::span<const DelayStats> stats) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  std::set<Count> sizes;
  for (const DelayStats& s : stats) {
    if (s.max_seconds <= 0 || s.n < 1) continue;
    const double x = std::log(static_cast<double>(s.n));
    const double y = std::log(s.max_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
    sizes.insert(s.n);
  }
  if (sizes.size() < 2) return std::nullopt;
  const double k = static_cast<double>(m);
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace fdgen
