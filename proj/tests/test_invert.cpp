#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sweepmap/combinatorics.hpp"
#include "sweepmap/invert.hpp"

namespace sweepmap {
namespace {

using Ranks = std::vector<Rank>;

Ranks ranks_of(const PathDiagram& d) { return Ranks(d.ranks().begin(), d.ranks().end()); }

const char* const kSuite[] = {"1^2,-1^2", "1^3,-1^3", "1^4,-1^4", "1^5,-1^5", "3^2,-2^3",
                              "2^3,-3^2", "2,1,0,-1,-2", "2^2,0^2,-1^4", "1^4,-2^2"};

TEST(Vib, WorkedExampleMoves) {
  const auto result = vib(PathDiagram({2, 0, 2, -3, 1, -2}, {0, 0, 0, 3, 3, 3}));
  const std::vector<VibMove> expected{
      {1, 0, 3, 0, 1}, {2, 3, 6, 3, 4}, {3, 1, 3, 1, 2}, {4, 3, 5, 3, 4}, {5, 4, 6, 4, 5}};
  EXPECT_EQ(result.trace.moves, expected);
  EXPECT_EQ(ranks_of(result.balanced), (Ranks{0, 0, 2, 3, 4, 5}));
  EXPECT_EQ(result.trace.initial_ranks, (Ranks{0, 0, 0, 3, 3, 3}));
  EXPECT_EQ(result.trace.final_ranks, (Ranks{0, 0, 2, 3, 4, 5}));
}

TEST(Vib, AlreadyBalancedAndEmpty) {
  const PathDiagram d({1, 1, -1, -1}, {0, 0, 1, 1});
  const auto result = vib(d);
  EXPECT_TRUE(result.trace.moves.empty());
  EXPECT_EQ(result.balanced, d);
  EXPECT_TRUE(vib(PathDiagram{}).trace.moves.empty());
}

TEST(Vib, RejectsBadInput) {
  EXPECT_THROW(vib(PathDiagram({1, -1}, {1, 0})), PreconditionError);
  EXPECT_THROW(vib(PathDiagram({-1, 1}, {1, 1})), PreconditionError);
  EXPECT_THROW(vib(PathDiagram({1, -1}, {0, 0})), PreconditionError);
}

TEST(Vib, CapTurnsIntoError) {
  AlgorithmOptions options;
  options.vib_max_moves = 2;
  EXPECT_THROW(vib(PathDiagram({2, 0, 2, -3, 1, -2}, {0, 0, 0, 3, 3, 3}), options), CapExceeded);
  options.vib_max_moves = 5;
  EXPECT_NO_THROW(vib(PathDiagram({2, 0, 2, -3, 1, -2}, {0, 0, 0, 3, 3, 3}), options));
}

// Each move obeys the selection rule: replaying on the tally oracle, the
// working row is the lowest positive row and the arrow is the rightmost one
// starting there.
TEST(Vib, MovesFollowSelectionRule) {
  for (const char* t : kSuite) {
    for (const auto& p : enumerate({parse_multiset(t), FamilyKind::dyck})) {
      const auto start = minimal_diagram(p);
      const auto result = vib(start);
      Ranks r = ranks_of(start);
      for (const auto& m : result.trace.moves) {
        const auto tally = testing::tally_row_counts(p.vector(), r, -20, 40);
        Rank lowest = 1000;
        for (auto& [j, c] : tally) {
          if (c > 0) {
            lowest = j;
            break;
          }
        }
        ASSERT_EQ(m.row, lowest) << p;
        std::size_t rightmost = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (r[i] == lowest) rightmost = i + 1;
        }
        ASSERT_EQ(m.column, rightmost) << p;
        ++r[m.column - 1];
      }
      EXPECT_EQ(r, result.trace.final_ranks);
      EXPECT_TRUE(result.balanced.is_increasing());
      EXPECT_TRUE(is_balanced(result.balanced));
    }
  }
}

TEST(Vib, TightBetweenMinimalAndOutput) {
  std::mt19937_64 rng(5);
  std::size_t most_moves = 0;
  for (const char* t : {"1^4,-1^4", "3^2,-2^3", "2,1,0,-1,-2"}) {
    for (const auto& p : enumerate({parse_multiset(t), FamilyKind::dyck})) {
      const auto minimal = minimal_diagram(p);
      const auto target = vib(minimal);
      most_moves = std::max(most_moves, target.trace.moves.size());
      const auto lo = ranks_of(minimal);
      const auto hi = target.trace.final_ranks;
      for (int s = 0; s < 100; ++s) {
        const auto r = testing::random_increasing_between(lo, hi, rng);
        ASSERT_TRUE(rank_leq(lo, r) && rank_leq(r, hi));
        EXPECT_EQ(ranks_of(vib(PathDiagram(p.vector(), r)).balanced), hi) << p;
      }
    }
  }
  RecordProperty("most_vib_moves", static_cast<int>(most_moves));
}

TEST(HPath, Examples) {
  const auto reverse = PermSchedule::reverse();
  const auto a = hpath(PathDiagram({2, 0, 2, -3, 1, -2}, {0, 0, 2, 3, 4, 5}), reverse);
  EXPECT_EQ(a.path, (Path{0, 2, 2, 1, -2, -3}));
  ASSERT_EQ(a.trace.rounds.size(), 1u);
  std::vector<std::size_t> columns;
  for (const auto& l : a.trace.rounds[0].labels) columns.push_back(l.column);
  EXPECT_EQ(columns, (std::vector<std::size_t>{2, 1, 3, 5, 6, 4}));

  EXPECT_EQ(hpath(PathDiagram({1, 1, -1, -1}, {0, 0, 1, 1}), reverse).path, (Path{1, -1, 1, -1}));
  for (const auto& s : testing::standard_schedules()) {
    EXPECT_EQ(hpath(PathDiagram({1, -1}, {0, 1}), s).path, (Path{1, -1}));
  }
  EXPECT_EQ(hpath(PathDiagram{}, reverse).path, Path{});
}

TEST(HPath, ShiftsWhenStuck) {
  const auto result = hpath(PathDiagram({1, 1, -1, -1}, {0, 1, 1, 2}), PermSchedule::reverse());
  ASSERT_EQ(result.trace.rounds.size(), 2u);
  const auto& first = result.trace.rounds[0];
  EXPECT_EQ(first.stop, HPathStop::stuck_at_level_zero);
  ASSERT_EQ(first.labels.size(), 2u);
  EXPECT_EQ(first.labels[0].column, 1u);
  EXPECT_EQ(first.labels[1].column, 3u);
  EXPECT_EQ(first.ranks_after, (Ranks{0, 0, 1, 1}));
  EXPECT_EQ(result.path, (Path{1, -1, 1, -1}));
  EXPECT_EQ(ranks_of(result.stable), (Ranks{0, 0, 1, 1}));
}

TEST(HPath, RejectsBadInput) {
  const auto reverse = PermSchedule::reverse();
  EXPECT_THROW(hpath(PathDiagram({1, -1}, {1, 0}), reverse), PreconditionError);
  EXPECT_THROW(hpath(PathDiagram({2, -1, -1}, {0, 0, 0}), reverse), PreconditionError);
  EXPECT_THROW(hpath(PathDiagram({-1, 1}, {0, 1}), reverse), PreconditionError);
}

TEST(IsStable, Examples) {
  const auto reverse = PermSchedule::reverse();
  EXPECT_TRUE(is_stable(PathDiagram({2, 0, 2, -3, 1, -2}, {0, 0, 2, 3, 4, 5}), reverse));
  EXPECT_TRUE(is_stable(PathDiagram{}, reverse));
  // The tour from column 1 climbs through column 3 and returns via 4 and 2.
  EXPECT_TRUE(is_stable(PathDiagram({1, -1, 1, -1}, {0, 1, 1, 2}), reverse));
  EXPECT_FALSE(is_stable(PathDiagram({1, 1, -1, -1}, {0, 1, 1, 2}), reverse));
}

TEST(IsStable, IndependentOfSchedule) {
  std::mt19937_64 rng(17);
  const auto schedules = testing::standard_schedules();
  std::size_t unstable = 0;
  for (const auto& d : testing::random_balanced_diagrams(rng, 300)) {
    const bool first = is_stable(d, schedules[0]);
    unstable += first ? 0 : 1;
    for (const auto& s : schedules) EXPECT_EQ(is_stable(d, s), first) << d << ' ' << s.name();
  }
  EXPECT_GT(unstable, 20u);
}

TEST(HPath, OutputSweepsBackOnRandomDiagrams) {
  std::mt19937_64 rng(23);
  for (const auto& d : testing::random_balanced_diagrams(rng, 200)) {
    for (const auto& s : testing::standard_schedules()) {
      const auto result = hpath(d, s);
      EXPECT_EQ(osweep(result.path, s), vpath(d));
      EXPECT_TRUE(is_dyck(result.path));
    }
  }
}

TEST(InvOsweep, Examples) {
  EXPECT_EQ(inv_osweep({2, 0, 2, -3, 1, -2}, PermSchedule::reverse()), (Path{0, 2, 2, 1, -2, -3}));
  EXPECT_EQ(inv_osweep({1, 1, -1, -1}, PermSchedule::reverse()), (Path{1, -1, 1, -1}));
  for (const auto& s : testing::standard_schedules()) EXPECT_EQ(inv_osweep({1, -1}, s), (Path{1, -1}));
  EXPECT_EQ(inv_osweep(Path{}, PermSchedule::reverse()), Path{});
  EXPECT_THROW(inv_osweep({-1, 1}, PermSchedule::reverse()), PreconditionError);
  EXPECT_THROW(inv_osweep({1, -2}, PermSchedule::reverse()), PreconditionError);
}

TEST(InvOsweep, RoundTripsBothWays) {
  for (const auto& s : testing::standard_schedules()) {
    for (const char* t : kSuite) {
      for (const auto& p : enumerate({parse_multiset(t), FamilyKind::dyck})) {
        const auto traced = inv_osweep_traced(p, s);
        EXPECT_EQ(traced.hpath.trace.rounds.size(), 1u) << p;
        EXPECT_EQ(osweep(traced.preimage, s), p) << s.name();
        EXPECT_EQ(inv_osweep(osweep(p, s), s), p) << s.name();
      }
    }
  }
}

TEST(InvOsweep, ChecksOffGivesSameAnswers) {
  AlgorithmOptions off;
  off.checks = CheckMode::off;
  for (const auto& p : enumerate({parse_multiset("2^2,0^2,-1^4"), FamilyKind::dyck})) {
    EXPECT_EQ(inv_osweep(p, PermSchedule::cycle(), off), inv_osweep(p, PermSchedule::cycle()));
  }
}

TEST(CheckInvariant, ErrorModeThrows) {
  EXPECT_THROW(check_invariant(CheckMode::error, false, [] { return std::string("x"); }), InvariantViolation);
  EXPECT_NO_THROW(check_invariant(CheckMode::off, false, [] { return std::string("x"); }));
  EXPECT_DEATH(check_invariant(CheckMode::panic, false, [] { return std::string("boom"); }), "boom");
}

}  // namespace
}  // namespace sweepmap
