#include <random>

#include <gtest/gtest.h>

#include "tvg/multi_interval.hpp"
#include "tvg/time.hpp"

namespace tvg {
namespace {

TEST(TimeInstant, EpochIsDayZero) {
  EXPECT_EQ(from_calendar(1992, 1, 1).value, 0);
  EXPECT_EQ(from_calendar(1992, 3, 1).value, 60);  // 1992 is a leap year
  EXPECT_EQ(from_calendar(1993, 1, 1).value, 366);
  EXPECT_EQ(from_calendar(2003, 5, 1).value, 4138);
}

TEST(TimeInstant, CalendarRoundTrip) {
  for (std::int64_t d = 0; d < 5000; d += 7) {
    auto [y, m, day] = to_calendar(TimeInstant{d});
    EXPECT_EQ(from_calendar(y, m, day).value, d);
  }
  EXPECT_EQ(to_iso(TimeInstant{0}), "1992-01-01");
  EXPECT_EQ(to_iso(TimeInstant{4138}), "2003-05-01");
}

TEST(TimeInstant, ParsesDayAndMonthDates) {
  EXPECT_EQ(try_parse_date("1999-07-15"), from_calendar(1999, 7, 15));
  EXPECT_EQ(try_parse_date("1999-07"), from_calendar(1999, 7, 1));
  EXPECT_FALSE(try_parse_date("1999-13-01"));
  EXPECT_FALSE(try_parse_date("1999-02-30"));
  EXPECT_FALSE(try_parse_date("1991-12-31"));
  EXPECT_FALSE(try_parse_date("99-01-01"));
  EXPECT_FALSE(try_parse_date("1999/01/01"));
  EXPECT_FALSE(try_parse_date("1999-1-01"));
}

TEST(Interval, RequiresStartBeforeEnd) {
  EXPECT_NO_THROW(Interval(0, 1));
  EXPECT_NO_THROW(Interval(0, 4050));
  EXPECT_THROW(Interval(0, 0), Error);
  EXPECT_THROW(Interval(5, 2), Error);
  EXPECT_THROW(Interval(-1, 2), Error);
}

TEST(Interval, HalfOpenMembership) {
  Interval iv(2, 3);
  EXPECT_TRUE(iv.contains(TimeInstant{2}));
  EXPECT_FALSE(iv.contains(TimeInstant{3}));
  EXPECT_FALSE(iv.contains(TimeInstant{1}));
}

TEST(MultiInterval, KeepsDisjointPieces) {
  MultiInterval mi;
  mi.add(Interval(0, 1));
  mi.add(Interval(2, 3));
  ASSERT_EQ(mi.size(), 2u);
  EXPECT_EQ(mi.intervals()[0], Interval(0, 1));
  EXPECT_EQ(mi.intervals()[1], Interval(2, 3));
}

TEST(MultiInterval, MergesOverlappingAndAdjacent) {
  MultiInterval overlap;
  overlap.add(Interval(0, 2));
  overlap.add(Interval(1, 3));
  ASSERT_EQ(overlap.size(), 1u);
  EXPECT_EQ(overlap.intervals()[0], Interval(0, 3));

  MultiInterval adjacent;
  adjacent.add(Interval(2, 3));
  adjacent.add(Interval(0, 2));
  ASSERT_EQ(adjacent.size(), 1u);
  EXPECT_EQ(adjacent.intervals()[0], Interval(0, 3));

  MultiInterval bridge;
  bridge.add(Interval(0, 1));
  bridge.add(Interval(4, 5));
  bridge.add(Interval(8, 9));
  bridge.add(Interval(1, 8));
  ASSERT_EQ(bridge.size(), 1u);
  EXPECT_EQ(bridge.intervals()[0], Interval(0, 9));
}

TEST(MultiInterval, EarliestFrom) {
  MultiInterval mi;
  mi.add(Interval(0, 1));
  mi.add(Interval(5, 7));
  EXPECT_EQ(mi.earliest_from(TimeInstant{0}), TimeInstant{0});
  EXPECT_EQ(mi.earliest_from(TimeInstant{1}), TimeInstant{5});
  EXPECT_EQ(mi.earliest_from(TimeInstant{6}), TimeInstant{6});
  EXPECT_FALSE(mi.earliest_from(TimeInstant{7}));
}

// Normalization property against a day-by-day bitmap over lifetimes <= 100 days.
TEST(MultiInterval, MatchesBitmapOracle) {
  std::mt19937 rng(20240611);
  for (int round = 0; round < 2000; ++round) {
    const int life = std::uniform_int_distribution<int>(1, 100)(rng);
    std::vector<char> bitmap(static_cast<std::size_t>(life), 0);
    MultiInterval mi;
    const int adds = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int k = 0; k < adds; ++k) {
      int s = std::uniform_int_distribution<int>(0, life - 1)(rng);
      int e = std::uniform_int_distribution<int>(s + 1, std::min(life, s + 20))(rng);
      mi.add(Interval(s, e));
      for (int t = s; t < e; ++t) bitmap[static_cast<std::size_t>(t)] = 1;
    }
    const auto& parts = mi.intervals();
    for (std::size_t i = 1; i < parts.size(); ++i)
      ASSERT_LT(parts[i - 1].end, parts[i].start) << "pieces must be sorted and non-adjacent";
    for (int t = 0; t < life; ++t)
      ASSERT_EQ(mi.contains(TimeInstant{t}), bitmap[static_cast<std::size_t>(t)] != 0);
    for (int s = 0; s < life; s += 3) {
      Interval w(s, std::min(life, s + 4));
      bool any = false;
      for (int t = s; t < w.end.value; ++t) any |= bitmap[static_cast<std::size_t>(t)] != 0;
      ASSERT_EQ(mi.intersects(w), any);
    }
  }
}

}  // namespace
}  // namespace tvg
