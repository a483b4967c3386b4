#pragma once

// Incomplete Dyck paths: total -a < 0, never dipping below 0 when started at
// level a. Prepending the arrow (1, a) completes one to a Dyck path; the
// sweep and order sweep maps on incomplete paths are conjugates of the order
// sweep map on the completions.

#include <string>
#include <utility>
#include <vector>

#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"
#include "sweepmap/invert.hpp"
#include "sweepmap/schedule.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

class IncompletePath {
 public:
  explicit IncompletePath(Path path) : path_(std::move(path)) {
    if (!is_incomplete(path_)) {
      throw PreconditionError("(" + to_string(path_) + ") is not an incomplete Dyck path");
    }
  }

  const Path& path() const noexcept { return path_; }
  Rank a() const noexcept { return path_.start_level(); }
  std::vector<Rank> ranks() const { return path_.starting_ranks(); }

  friend bool operator==(const IncompletePath&, const IncompletePath&) = default;

 private:
  Path path_;
};

inline Path complete(const IncompletePath& p) {
  std::vector<Step> steps;
  steps.reserve(p.path().size() + 1);
  steps.push_back(p.a());
  steps.insert(steps.end(), p.path().steps().begin(), p.path().steps().end());
  return Path(std::move(steps));
}

inline IncompletePath strip(const Path& d) {
  if (d.empty() || d[0] <= 0) {
    throw PreconditionError("strip requires a path starting with an up step, got (" + to_string(d) + ")");
  }
  Path rest(std::vector<Step>(d.steps().begin() + 1, d.steps().end()));
  if (!is_incomplete(rest) || rest.start_level() != d[0]) {
    throw PreconditionError("(" + to_string(d) + ") without its first step is not an incomplete Dyck path");
  }
  return IncompletePath(std::move(rest));
}

namespace detail {

// The completion's first arrow sits alone at the front of level 0, and the
// lifted schedule fixes position 1, so it is always emitted first.
inline IncompletePath conjugate_osweep(const IncompletePath& p, const PermSchedule& lifted,
                                       CheckMode mode) {
  const Path full = complete(p);
  const auto order = sweep_order(full, lifted);
  check_invariant(mode, !order.empty() && order.front() == 0, [&] {
    return "osweep of the completion of (" + to_string(p.path()) + ") does not emit the added arrow first";
  });
  std::vector<Step> image;
  image.reserve(order.size());
  for (auto i : order) image.push_back(full[i]);
  return strip(Path(std::move(image)));
}

}  // namespace detail

inline IncompletePath osweep_incomplete(const IncompletePath& p, const PermSchedule& schedule,
                                        CheckMode mode = CheckMode::error) {
  return detail::conjugate_osweep(p, schedule.lifted(), mode);
}

// Conjugation by the completion with phi_k = 1 k k-1 ... 2.
inline IncompletePath sweep_incomplete(const IncompletePath& p, CheckMode mode = CheckMode::error) {
  return detail::conjugate_osweep(p, PermSchedule::cycle(), mode);
}

// Sweeps the incomplete path's own diagram (ranks a, a+b_1, ...). Agrees with
// sweep_incomplete; kept as the independent route.
inline Path sweep_incomplete_direct(const IncompletePath& p) { return sweep(p.path()); }

inline IncompletePath inv_osweep_incomplete(const IncompletePath& p, const PermSchedule& schedule,
                                            const AlgorithmOptions& options = {}) {
  return strip(inv_osweep(complete(p), schedule.lifted(), options));
}

inline IncompletePath inv_sweep_incomplete(const IncompletePath& p, const AlgorithmOptions& options = {}) {
  return strip(inv_osweep(complete(p), PermSchedule::cycle(), options));
}

}  // namespace sweepmap
