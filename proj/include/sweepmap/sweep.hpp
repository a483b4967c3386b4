#pragma once

// Forward maps: the sweep map, the order sweep map and the horizontal-shift
// diagram HIB.
//
// Arrows are emitted by starting rank in the order 0, 1, 2, ... followed by
// the negative ranks from the lowest up to -1. Ties at a positive or negative
// rank are emitted right to left. The k arrows at rank 0, C_1..C_k from left
// to right, are emitted as C_{phi_k(1)}, ..., C_{phi_k(k)}; the reverse
// schedule recovers the classical right-to-left rule.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"
#include "sweepmap/schedule.hpp"

namespace sweepmap {

// Emission order as 0-based column indices of `path`.
inline std::vector<std::size_t> sweep_order(const Path& path, const PermSchedule& schedule) {
  const auto n = path.size();
  std::vector<std::size_t> order;
  order.reserve(n);
  if (n == 0) return order;

  const auto ranks = path.starting_ranks();
  const auto [lo_it, hi_it] = std::minmax_element(ranks.begin(), ranks.end());
  const Rank lo = *lo_it;
  const Rank hi = *hi_it;

  // Buckets keep ascending column order, so ties are controlled explicitly.
  std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < n; ++i) buckets[static_cast<std::size_t>(ranks[i] - lo)].push_back(i);
  auto bucket = [&](Rank r) -> const std::vector<std::size_t>& {
    return buckets[static_cast<std::size_t>(r - lo)];
  };

  auto emit_right_to_left = [&](Rank r) {
    const auto& b = bucket(r);
    order.insert(order.end(), b.rbegin(), b.rend());
  };

  if (lo <= 0 && 0 <= hi) {
    const auto& level0 = bucket(0);
    if (!level0.empty()) {
      const auto phi = schedule.at(level0.size());
      for (std::size_t j = 1; j <= level0.size(); ++j) order.push_back(level0[phi(j) - 1]);
    }
  }
  for (Rank r = std::max<Rank>(1, lo); r <= hi; ++r) emit_right_to_left(r);
  for (Rank r = lo; r <= std::min<Rank>(-1, hi); ++r) emit_right_to_left(r);
  return order;
}

inline Path osweep(const Path& path, const PermSchedule& schedule) {
  std::vector<Step> out;
  out.reserve(path.size());
  for (auto i : sweep_order(path, schedule)) out.push_back(path[i]);
  return Path(std::move(out));
}

inline Path sweep(const Path& path) { return osweep(path, PermSchedule::reverse()); }

// The diagram whose columns are the arrows of `path` in emission order, each
// kept at its original starting rank. Increasing and balanced for Dyck input,
// and its V-path is osweep(path, schedule).
inline PathDiagram hib(const Path& path, const PermSchedule& schedule) {
  if (!is_dyck(path)) {
    throw PreconditionError("hib requires a Dyck path, got (" + to_string(path) + ")");
  }
  const auto ranks = path.starting_ranks();
  std::vector<Step> steps;
  std::vector<Rank> out_ranks;
  steps.reserve(path.size());
  out_ranks.reserve(path.size());
  for (auto i : sweep_order(path, schedule)) {
    steps.push_back(path[i]);
    out_ranks.push_back(ranks[i]);
  }
  return PathDiagram(std::move(steps), std::move(out_ranks));
}

}  // namespace sweepmap
