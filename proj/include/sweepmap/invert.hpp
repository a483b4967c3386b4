#pragma once

// Inversion of the order sweep map.
//
//   vib        raises arrows of a positive diagram until it is balanced
//   hpath      reads an order sweep preimage off an increasing balanced
//              diagram, shifting unreachable arrows down when it gets stuck
//   inv_osweep minimal diagram -> vib -> hpath
//
// Every step records a trace, and the properties the construction relies on
// are asserted at runtime according to `AlgorithmOptions::checks`.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sweepmap/core.hpp"
#include "sweepmap/errors.hpp"
#include "sweepmap/schedule.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

struct AlgorithmOptions {
  CheckMode checks = CheckMode::error;
  // Safety cap on vib moves; derived from the diagram when unset.
  std::optional<std::size_t> vib_max_moves;
};

// ---------------------------------------------------------------------------
// VIB

struct VibMove {
  std::size_t step = 0;    // 1-based move number
  Rank row = 0;            // working row
  std::size_t column = 0;  // 1-based column of the raised arrow
  Rank before = 0;
  Rank after = 0;
  friend bool operator==(const VibMove&, const VibMove&) = default;
};

struct VibTrace {
  std::vector<VibMove> moves;
  std::vector<Rank> initial_ranks;
  std::vector<Rank> final_ranks;
};

struct VibResult {
  PathDiagram balanced;
  VibTrace trace;
};

namespace detail {

// Dense row counts over a growing window of rows.
class DenseRowCounts {
 public:
  explicit DenseRowCounts(const PathDiagram& d) {
    Rank lo = 0;
    Rank hi = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      lo = std::min({lo, d.rank(i), d.end_rank(i)});
      hi = std::max({hi, d.rank(i), d.end_rank(i)});
    }
    base_ = lo;
    counts_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    const auto counts = row_counts(d);
    for (auto& [j, rc] : counts.rows()) counts_[index(j)] = rc.count();
  }

  Rank base() const noexcept { return base_; }
  Rank top() const noexcept { return base_ + static_cast<Rank>(counts_.size()) - 1; }

  std::int64_t get(Rank j) const {
    if (j < base_ || j > top()) return 0;
    return counts_[index(j)];
  }

  std::int64_t& at(Rank j) {
    if (j > top()) counts_.resize(static_cast<std::size_t>(j - base_ + 1), 0);
    return counts_[index(j)];
  }

  std::optional<Rank> lowest_positive() const {
    for (std::size_t k = 0; k < counts_.size(); ++k) {
      if (counts_[k] > 0) return base_ + static_cast<Rank>(k);
    }
    return std::nullopt;
  }

  bool all_zero() const {
    return std::all_of(counts_.begin(), counts_.end(), [](auto c) { return c == 0; });
  }

 private:
  std::size_t index(Rank j) const { return static_cast<std::size_t>(j - base_); }

  Rank base_ = 0;
  std::vector<std::int64_t> counts_;
};

// Bound from the termination argument: no working row exceeds the highest
// level U of the start diagram by more than the number of red segments.
inline std::size_t default_vib_cap(const PathDiagram& d) {
  Rank high = 0;
  Rank low = 0;
  std::int64_t red_segments = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    high = std::max({high, d.rank(i), d.end_rank(i)});
    low = std::min(low, d.rank(i));
    if (d.step(i) > 0) red_segments += d.step(i);
  }
  const auto per_arrow = static_cast<std::size_t>(high - low + red_segments + 2);
  return d.size() * per_arrow + 1;
}

}  // namespace detail

inline VibResult vib(const PathDiagram& diagram, const AlgorithmOptions& options = {}) {
  if (!diagram.is_positive()) {
    throw PreconditionError("vib requires a positive path diagram (weakly increasing ranks, "
                            "end ranks >= 0)");
  }
  if (!is_dyck(vpath(diagram))) {
    throw PreconditionError("vib requires the steps to form a Dyck path, got (" +
                            to_string(vpath(diagram)) + ")");
  }

  const auto n = diagram.size();
  const auto mode = options.checks;
  const std::size_t cap = options.vib_max_moves.value_or(detail::default_vib_cap(diagram));

  std::vector<Rank> ranks(diagram.ranks().begin(), diagram.ranks().end());
  detail::DenseRowCounts counts(diagram);

  // Rows whose count has been >= 0 at some point; they must stay there.
  std::vector<bool> settled(static_cast<std::size_t>(counts.top() - counts.base() + 1));
  auto mark_settled = [&](Rank j) {
    const auto k = static_cast<std::size_t>(j - counts.base());
    if (k >= settled.size()) settled.resize(k + 1, true);  // rows above start at zero
    if (counts.get(j) >= 0) settled[k] = true;
  };
  auto is_settled = [&](Rank j) {
    const auto k = static_cast<std::size_t>(j - counts.base());
    return k >= settled.size() || settled[k];
  };
  for (Rank j = counts.base(); j <= counts.top(); ++j) mark_settled(j);

  VibTrace trace;
  trace.initial_ranks = ranks;

  while (auto row = counts.lowest_positive()) {
    const Rank j = *row;
    if (trace.moves.size() >= cap) {
      throw CapExceeded("vib exceeded its safety cap of " + std::to_string(cap) +
                        " moves; this indicates an implementation bug");
    }

    // Rightmost arrow starting at level j. Ranks are weakly increasing.
    auto it = std::upper_bound(ranks.begin(), ranks.end(), j);
    if (it == ranks.begin() || *std::prev(it) != j) {
      // The lowest positive row always hosts a starting arrow on valid input.
      throw InvariantViolation("vib: lowest positive row " + std::to_string(j) +
                               " has no arrow starting on it");
    }
    const auto i = static_cast<std::size_t>(std::distance(ranks.begin(), it) - 1);
    const Step b = diagram.step(i);

    if (b != 0) {
      --counts.at(j);
      ++counts.at(j + b);
    }
    ++ranks[i];
    trace.moves.push_back({trace.moves.size() + 1, j, i + 1, j, j + 1});

    check_invariant(mode, i + 1 == n || ranks[i] <= ranks[i + 1], [&] {
      return "vib: rank sequence stopped increasing at column " + std::to_string(i + 1);
    });
    if (b != 0 && mode != CheckMode::off) {
      for (Rank touched : {j, j + b}) {
        check_invariant(mode, !is_settled(touched) || counts.get(touched) >= 0, [&] {
          return "vib: row " + std::to_string(touched) + " went negative after settling";
        });
        mark_settled(touched);
      }
    }
  }

  check_invariant(mode, counts.all_zero(), [] {
    return std::string("vib: stopped with negative row counts");
  });
  const auto distance = std::accumulate(ranks.begin(), ranks.end(), Rank{0}) -
                        std::accumulate(trace.initial_ranks.begin(), trace.initial_ranks.end(), Rank{0});
  check_invariant(mode, distance == static_cast<Rank>(trace.moves.size()), [] {
    return std::string("vib: rank distance differs from move count");
  });

  trace.final_ranks = ranks;
  return {diagram.with_ranks(std::move(ranks)), std::move(trace)};
}

// ---------------------------------------------------------------------------
// HPath

struct HPathLabel {
  std::size_t i = 0;       // 1-based label
  std::size_t column = 0;  // 1-based column of the labeled arrow
  Rank level = 0;          // starting rank of the labeled arrow
  friend bool operator==(const HPathLabel&, const HPathLabel&) = default;
};

enum class HPathStop { completed, stuck_at_level_zero };

struct HPathRound {
  std::size_t k = 0;  // level-0 arrows at the start of the round
  std::vector<HPathLabel> labels;
  HPathStop stop = HPathStop::completed;
  std::vector<Rank> ranks_after;  // after the downshift, if one happened
};

struct HPathTrace {
  std::vector<HPathRound> rounds;

  bool stable() const noexcept { return rounds.size() == 1; }
};

struct HPathResult {
  Path path;
  PathDiagram stable;  // the diagram the final round labeled completely
  HPathTrace trace;
};

namespace detail {

inline bool steps_balanced(const PathDiagram& d, const std::vector<std::size_t>& columns) {
  std::vector<Step> steps;
  std::vector<Rank> ranks;
  for (auto c : columns) {
    steps.push_back(d.step(c));
    ranks.push_back(d.rank(c));
  }
  return is_balanced(PathDiagram(std::move(steps), std::move(ranks)));
}

inline void require_hpath_input(const PathDiagram& d, const char* who) {
  if (!d.is_increasing()) {
    throw PreconditionError(std::string(who) + " requires a weakly increasing rank sequence");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.rank(i) < 0 || d.end_rank(i) < 0) {
      throw PreconditionError(std::string(who) + " requires ranks and end ranks >= 0 (column " +
                              std::to_string(i + 1) + ")");
    }
  }
  if (!is_balanced(d)) throw PreconditionError(std::string(who) + " requires a balanced diagram");
}

}  // namespace detail

inline HPathResult hpath(const PathDiagram& diagram, const PermSchedule& schedule,
                         const AlgorithmOptions& options = {}) {
  detail::require_hpath_input(diagram, "hpath");
  const auto mode = options.checks;
  const auto n = diagram.size();

  std::vector<Rank> ranks(diagram.ranks().begin(), diagram.ranks().end());
  const Rank rank_sum = std::accumulate(ranks.begin(), ranks.end(), Rank{0});
  const auto max_rounds = static_cast<std::size_t>(rank_sum) + 1;

  HPathTrace trace;
  std::vector<std::size_t> pi;

  while (true) {
    if (trace.rounds.size() >= max_rounds) {
      throw InvariantViolation("hpath: downshift did not converge within " +
                               std::to_string(max_rounds) + " rounds");
    }
    const PathDiagram current = diagram.with_ranks(ranks);

    std::vector<std::size_t> level0;
    for (std::size_t c = 0; c < n && ranks[c] == 0; ++c) level0.push_back(c);
    const auto k = level0.size();
    const auto phi_inv = schedule.inverse_at(k);

    HPathRound round;
    round.k = k;
    std::vector<bool> labeled(n, false);
    std::unordered_map<Rank, std::size_t> cursor;  // one past the rightmost unlabeled arrow
    pi.clear();

    Rank level = 0;
    std::size_t visits = 0;
    bool stuck = false;
    for (std::size_t i = 1; i <= n; ++i) {
      std::optional<std::size_t> pick;
      if (level == 0) {
        ++visits;
        if (visits <= k) {
          const auto c = level0[phi_inv(visits) - 1];
          if (labeled[c]) {
            throw InvariantViolation("hpath: level-0 selection " + std::to_string(visits) +
                                     " hit already labeled column " + std::to_string(c + 1));
          }
          pick = c;
        }
      } else {
        auto [found, inserted] = cursor.try_emplace(level, 0);
        if (inserted) {
          found->second = static_cast<std::size_t>(
              std::distance(ranks.begin(), std::upper_bound(ranks.begin(), ranks.end(), level)));
        }
        auto& end = found->second;
        if (end > 0 && ranks[end - 1] == level) pick = --end;
      }

      if (!pick) {
        stuck = true;
        break;
      }
      labeled[*pick] = true;
      pi.push_back(*pick);
      round.labels.push_back({i, *pick + 1, level});
      level = ranks[*pick] + diagram.step(*pick);
    }

    if (!stuck) {
      round.stop = HPathStop::completed;
      round.ranks_after = ranks;
      trace.rounds.push_back(std::move(round));
      break;
    }

    round.stop = HPathStop::stuck_at_level_zero;
    if (mode != CheckMode::off) {
      check_invariant(mode, level == 0, [&] {
        return "hpath: stuck at level " + std::to_string(level) + " instead of level 0";
      });
      check_invariant(mode, std::all_of(level0.begin(), level0.end(), [&](auto c) { return labeled[c]; }),
                      [] { return std::string("hpath: stuck with unlabeled level-0 arrows"); });
      std::vector<Step> prefix;
      for (auto c : pi) prefix.push_back(diagram.step(c));
      check_invariant(mode, is_dyck(Path(prefix)), [] {
        return std::string("hpath: labeled prefix is not a Dyck path");
      });
      std::vector<std::size_t> rest;
      for (std::size_t c = 0; c < n; ++c) {
        if (!labeled[c]) rest.push_back(c);
      }
      check_invariant(mode, detail::steps_balanced(current, pi) && detail::steps_balanced(current, rest),
                      [] { return std::string("hpath: labeled or unlabeled arrows are unbalanced"); });
    }

    for (std::size_t c = 0; c < n; ++c) {
      if (!labeled[c]) --ranks[c];
    }
    round.ranks_after = ranks;
    trace.rounds.push_back(std::move(round));

    if (mode != CheckMode::off) {
      const PathDiagram shifted = diagram.with_ranks(ranks);
      check_invariant(mode, shifted.is_positive() && ranks.front() >= 0 && is_balanced(shifted), [] {
        return std::string("hpath: downshift broke the increasing balanced shape");
      });
      check_invariant(mode, k == 0 || ranks.front() == 0, [] {
        return std::string("hpath: downshift left r_1 != 0");
      });
    }
  }

  std::vector<Step> out;
  out.reserve(n);
  for (auto c : pi) out.push_back(diagram.step(c));
  Path result(std::move(out));

  check_invariant(mode, is_dyck(result), [&] {
    return "hpath: output (" + to_string(result) + ") is not a Dyck path";
  });
  check_invariant(mode, mode == CheckMode::off || osweep(result, schedule) == vpath(diagram), [&] {
    return "hpath: osweep of output (" + to_string(result) + ") differs from the input V-path";
  });

  return {std::move(result), diagram.with_ranks(std::move(ranks)), std::move(trace)};
}

// True when hpath labels every arrow in its first round. The answer does not
// depend on the schedule.
inline bool is_stable(const PathDiagram& diagram, const PermSchedule& schedule,
                      const AlgorithmOptions& options = {}) {
  return hpath(diagram, schedule, options).trace.stable();
}

// ---------------------------------------------------------------------------
// InvOSweep

struct InvOsweepResult {
  Path preimage;
  PathDiagram minimal;
  VibResult vib;
  HPathResult hpath;
};

inline InvOsweepResult inv_osweep_traced(const Path& path, const PermSchedule& schedule,
                                         const AlgorithmOptions& options = {}) {
  if (!is_dyck(path)) {
    throw PreconditionError("inv_osweep requires a Dyck path, got (" + to_string(path) + ")");
  }
  auto minimal = minimal_diagram(path);
  auto balanced = vib(minimal, options);
  auto labeled = hpath(balanced.balanced, schedule, options);
  // The vib output is already stable, so hpath never shifts.
  check_invariant(options.checks, labeled.trace.stable(), [&] {
    return "inv_osweep: hpath needed " + std::to_string(labeled.trace.rounds.size()) +
           " rounds on the vib output of (" + to_string(path) + ")";
  });
  Path preimage = labeled.path;
  return {std::move(preimage), std::move(minimal), std::move(balanced), std::move(labeled)};
}

inline Path inv_osweep(const Path& path, const PermSchedule& schedule,
                       const AlgorithmOptions& options = {}) {
  return inv_osweep_traced(path, schedule, options).preimage;
}

}  // namespace sweepmap
