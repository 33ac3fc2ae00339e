#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "canon/event_time.hpp"
#include "canon/mountain_car.hpp"
#include "canon/standardize.hpp"
#include "canon/temporal.hpp"
#include "oracles.hpp"

using namespace canon;
namespace mc = canon::mountain_car;

namespace {

// State = {A fired, B fired}; sample k carries the flags of step k.
RawTrajectory flagged(std::size_t steps, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  RawTrajectory raw;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double fa = std::count(a.begin(), a.end(), k) ? 1.0 : 0.0;
    const double fb = std::count(b.begin(), b.end(), k) ? 1.0 : 0.0;
    raw.states.push_back({fa, fb});
    if (k < steps) raw.actions.push_back({0.0});
  }
  return raw;
}

const EventSpec kA = EventSpec::on_state("A", [](const Vec& s) { return s[0] > 0.5; }, [](const Vec&) { return 0.0; });
const EventSpec kB = EventSpec::on_state("B", [](const Vec& s) { return s[1] > 0.5; }, [](const Vec&) { return 0.0; });

const std::vector<EventPoint> kHaltFixture = {
    {-0.61, 34}, {-0.33, 77}, {-0.77, 118}, {-0.18, 153}, {-0.92, 194}, {-0.01, 235},
    {-1.16, 278}, {0.17, 325}, {-1.18, 376}, {0.11, 424}, {-1.14, 472}};

}  // namespace

TEST(TemporalAttribute, BlueTrajectory) {
  const auto out = standardize_trajectory(flagged(8, {1, 3}, {6}), temporal_attribute_fn(kA, kB));
  EXPECT_EQ(out[6].attribute.temporal, 3);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k != 6) EXPECT_FALSE(out[k].attribute.temporal.has_value()) << k;
  }
}

TEST(TemporalAttribute, GreenTrajectory) {
  const auto out = standardize_trajectory(flagged(9, {2}, {4, 7}), temporal_attribute_fn(kA, kB));
  EXPECT_EQ(out[4].attribute.temporal, 2);
  EXPECT_EQ(out[7].attribute.temporal, 5);
}

TEST(TemporalAttribute, SinkWithoutSource) {
  const auto out = standardize_trajectory(flagged(5, {4}, {2}), temporal_attribute_fn(kA, kB));
  EXPECT_FALSE(out[2].attribute.temporal.has_value());
}

TEST(TemporalAttribute, SameStepSourceDoesNotCount) {
  const auto out = standardize_trajectory(flagged(5, {1, 3}, {3}), temporal_attribute_fn(kA, kB));
  EXPECT_EQ(out[3].attribute.temporal, 2);
}

TEST(TemporalAttribute, MatchesOracleOnRollouts) {
  const mc::SimConfig sim;
  const EventSpec src = mc::start_event(sim), sink = mc::halt_event(sim);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto samples = standardize_trajectory(mc::rollout(sim, mc::Policy::kRandom, seed), empty_attributes());
    std::vector<bool> fs, fk;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      fs.push_back(k == 0);
      const auto& x = samples[k].transition.x;
      const auto prev = k ? samples[k - 1].transition.x : x;
      fk.push_back(mc::detect_halt(mc::State::from_vec(x), mc::State::from_vec(prev), static_cast<std::int64_t>(k), sim));
    }
    EXPECT_EQ(record_temporal_attributes(samples, src, sink), oracle::temporal(fs, fk)) << seed;
  }
}

TEST(TemporalAttribute, Tracker) {
  TemporalTracker t;
  EXPECT_FALSE(t.on_sink(3).has_value());
  t.observe_source(1);
  t.observe_source(3);
  EXPECT_EQ(t.on_sink(6), 3);
  t.reset();
  EXPECT_FALSE(t.on_sink(7).has_value());
}

TEST(EventTime, HaltFixtureMatchesOracle) {
  const EventTimeDistribution d = fit_event_time_distribution(kHaltFixture);
  EXPECT_EQ(d.breakpoints(), oracle::lower_hull(kHaltFixture));
  const std::vector<EventPoint> expected{{-1.18, 376}, {-1.16, 278}, {-0.61, 34},
                                         {-0.33, 77},  {-0.01, 235}, {0.17, 325}};
  EXPECT_EQ(d.breakpoints(), expected);
}

TEST(EventTime, SmallCases) {
  const EventTimeDistribution one = fit_event_time_distribution(std::vector<EventPoint>{{0.2, 9}});
  EXPECT_EQ(one.breakpoints().size(), 1u);
  EXPECT_EQ(one.query(-5), 9);
  EXPECT_EQ(one.query(5), 9);
  const EventTimeDistribution two = fit_event_time_distribution(std::vector<EventPoint>{{1, 10}, {0, 2}});
  EXPECT_EQ(two.breakpoints(), (std::vector<EventPoint>{{0, 2}, {1, 10}}));
  EXPECT_EQ(two.query(0.25), 4);
  const EventTimeDistribution dup =
      fit_event_time_distribution(std::vector<EventPoint>{{0, 5}, {0, 3}, {1, 4}});
  EXPECT_EQ(dup.breakpoints(), (std::vector<EventPoint>{{0, 3}, {1, 4}}));
  EXPECT_THROW(fit_event_time_distribution(std::vector<EventPoint>{}), std::invalid_argument);
  EXPECT_THROW(fit_event_time_distribution(std::vector<EventPoint>{{NAN, 1}}), std::invalid_argument);
  EXPECT_THROW(EventTimeDistribution().query(0), std::logic_error);
}

TEST(EventTime, CollinearPointsAreNotVertices) {
  const EventTimeDistribution d = fit_event_time_distribution(std::vector<EventPoint>{{0, 0}, {1, 1}, {2, 2}});
  EXPECT_EQ(d.breakpoints(), (std::vector<EventPoint>{{0, 0}, {2, 2}}));
}

TEST(EventTime, Query) {
  const EventTimeDistribution d = fit_event_time_distribution(kHaltFixture);
  for (const EventPoint& p : d.breakpoints()) EXPECT_EQ(d.query(p.coordinate), p.time);
  EXPECT_DOUBLE_EQ(d.query((-0.61 + -0.33) / 2), (34.0 + 77.0) / 2);
  EXPECT_EQ(d.query(-1.5), 376);
  EXPECT_EQ(d.query(0.5), 325);
}

TEST(EventTime, RandomSetsInvariants) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> size(1, 60);
  std::uniform_real_distribution<double> c(-1.2, 0.6), t(1, 500);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<EventPoint> pts(size(rng));
    for (auto& p : pts) p = {c(rng), std::round(t(rng))};
    const EventTimeDistribution d = fit_event_time_distribution(pts);
    const auto& bp = d.breakpoints();
    ASSERT_EQ(bp, oracle::lower_hull(pts));
    for (const auto& p : pts) ASSERT_GE(p.time, d.query(p.coordinate) - 1e-9);
    for (std::size_t i = 2; i < bp.size(); ++i) {
      const double s0 = (bp[i - 1].time - bp[i - 2].time) / (bp[i - 1].coordinate - bp[i - 2].coordinate);
      const double s1 = (bp[i].time - bp[i - 1].time) / (bp[i].coordinate - bp[i - 1].coordinate);
      ASSERT_LE(s0, s1);
    }
  }
}

TEST(EventTime, UpdateExamples) {
  EventTimeDistribution d = fit_event_time_distribution(kHaltFixture);
  const auto before = d.breakpoints();
  EXPECT_FALSE(d.update({-0.4, 300}));
  EXPECT_EQ(d.breakpoints(), before);
  EXPECT_TRUE(d.update({-0.4, 20}));
  EXPECT_NE(std::find(d.breakpoints().begin(), d.breakpoints().end(), EventPoint{-0.4, 20}), d.breakpoints().end());
  EventTimeDistribution empty;
  EXPECT_TRUE(empty.update({0.1, 5}));
  EXPECT_EQ(empty.breakpoints().size(), 1u);
}

TEST(EventTime, OnlineMatchesBatch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<EventPoint> pts = kHaltFixture;
    std::shuffle(pts.begin(), pts.end(), rng);
    EventTimeDistribution d;
    for (const auto& p : pts) d = update_distribution_online(d, p);
    ASSERT_EQ(d, fit_event_time_distribution(kHaltFixture));
  }
}

TEST(Shaping, Examples) {
  EXPECT_EQ(shaping_reward(34, 34), 0.0);
  EXPECT_EQ(shaping_reward(30, 34, 1.0), 4.0);
  EXPECT_EQ(shaping_reward(40, 34, 0.5), -3.0);
}
