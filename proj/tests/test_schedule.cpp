#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "sweepmap/schedule.hpp"

namespace sweepmap {
namespace {

using OneLine = std::vector<std::size_t>;

TEST(Permutation, ValidatesAndInverts) {
  const Permutation p({1, 3, 5, 2, 4});
  EXPECT_EQ(p.inverse().one_line(), (OneLine{1, 4, 2, 5, 3}));
  EXPECT_EQ(p(3), 5u);
  EXPECT_THROW(Permutation({1, 1}), PreconditionError);
  EXPECT_THROW(Permutation({0, 1}), PreconditionError);
  EXPECT_THROW(Permutation({1, 3}), PreconditionError);
}

TEST(PermSchedule, Builtins) {
  EXPECT_EQ(PermSchedule::reverse().at(4).one_line(), (OneLine{4, 3, 2, 1}));
  EXPECT_EQ(PermSchedule::identity().at(3).one_line(), (OneLine{1, 2, 3}));
  EXPECT_EQ(PermSchedule::cycle().at(5).one_line(), (OneLine{1, 5, 4, 3, 2}));
  EXPECT_EQ(PermSchedule::cycle().at(1).one_line(), (OneLine{1}));
  EXPECT_EQ(PermSchedule::cycle().at(2).one_line(), (OneLine{1, 2}));
}

TEST(PermSchedule, InverseComposesToIdentity) {
  for (const auto& s : testing::standard_schedules()) {
    for (std::size_t k = 1; k <= 12; ++k) {
      const auto phi = s.at(k);
      const auto inv = s.inverse_at(k);
      for (std::size_t j = 1; j <= k; ++j) EXPECT_EQ(inv(phi(j)), j) << s.name() << " k=" << k;
    }
  }
}

TEST(PermSchedule, LiftOfReverseIsCycle) {
  const auto lifted = PermSchedule::reverse().lifted();
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(lifted.at(k), PermSchedule::cycle().at(k)) << k;
  EXPECT_EQ(lifted.name(), "lift(reverse)");
}

TEST(PermSchedule, LiftShiftsAndFixesFirst) {
  const auto table = PermSchedule::table(BuiltinSchedule::identity, {{3, Permutation({2, 3, 1})}});
  EXPECT_EQ(table.lifted().at(4).one_line(), (OneLine{1, 3, 4, 2}));
  EXPECT_EQ(table.lifted().at(3).one_line(), (OneLine{1, 2, 3}));
  EXPECT_EQ(table.lifted().at(1).one_line(), (OneLine{1}));
}

TEST(PermSchedule, TableFallsBack) {
  const auto s = PermSchedule::table(BuiltinSchedule::reverse, {{2, Permutation({1, 2})}});
  EXPECT_EQ(s.at(2).one_line(), (OneLine{1, 2}));
  EXPECT_EQ(s.at(3).one_line(), (OneLine{3, 2, 1}));
  EXPECT_THROW(PermSchedule::table(BuiltinSchedule::reverse, {{3, Permutation({1, 2})}}), PreconditionError);
}

TEST(PermSchedule, ParsesNamesAndJson) {
  EXPECT_EQ(PermSchedule::parse("cycle").at(4), PermSchedule::cycle().at(4));
  const auto s = PermSchedule::parse(R"({"default": "identity", "table": {"3": [3, 1, 2]}})");
  EXPECT_EQ(s.at(3).one_line(), (OneLine{3, 1, 2}));
  EXPECT_EQ(s.at(4).one_line(), (OneLine{1, 2, 3, 4}));
  EXPECT_EQ(s.name(), "table(default=identity,k=3)");

  const auto round = PermSchedule::from_json(s.to_json());
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(round.at(k), s.at(k));
  EXPECT_EQ(PermSchedule::reverse().to_json(), nlohmann::json("reverse"));
}

TEST(PermSchedule, RejectsInvalidDocuments) {
  EXPECT_THROW(PermSchedule::parse("backwards"), ParseError);
  EXPECT_THROW(PermSchedule::parse(R"({"table": {"3": [1, 1, 2]}})"), ParseError);
  EXPECT_THROW(PermSchedule::parse(R"({"table": {"3": [1, 2]}})"), ParseError);
  EXPECT_THROW(PermSchedule::parse(R"({"table": {"0": []}})"), ParseError);
  EXPECT_THROW(PermSchedule::parse(R"({"default": "sideways"})"), ParseError);
  EXPECT_THROW(PermSchedule::parse(R"({"tabel": {}})"), ParseError);
  EXPECT_THROW(PermSchedule::parse("{not json"), ParseError);
  try {
    PermSchedule::parse(R"({"table": {"2": [2, 2]}})");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "[2,2]");
  }
}

TEST(PermSchedule, LoadsFile) {
  const std::string filename = ::testing::TempDir() + "schedule.json";
  {
    std::ofstream out(filename);
    out << R"({"default": "cycle", "table": {"2": [2, 1]}})";
  }
  const auto s = PermSchedule::load_file(filename);
  EXPECT_EQ(s.at(2).one_line(), (OneLine{2, 1}));
  EXPECT_EQ(s.at(3), PermSchedule::cycle().at(3));
  std::remove(filename.c_str());
  EXPECT_THROW(PermSchedule::load_file(filename), ParseError);
}

}  // namespace
}  // namespace sweepmap
