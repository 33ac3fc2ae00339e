#include <gtest/gtest.h>

#include "canon/qlearning.hpp"

using namespace canon;
namespace mc = canon::mountain_car;

namespace {

TrainConfig small(Shaping shaping, std::uint64_t seed) {
  TrainConfig c;
  c.episodes = 40;
  c.shaping = shaping;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(QTableTest, GreedyTiesGoToLowestIndex) {
  QTable t(4, 4);
  EXPECT_EQ(t.greedy(3), 0u);
  t.at(3, 2) = 1.0;
  t.at(3, 1) = 1.0;
  EXPECT_EQ(t.greedy(3), 1u);
  EXPECT_EQ(t.max_value(3), 1.0);
}

TEST(QTableTest, CellsCoverTheBox) {
  const QTable t(64, 64);
  EXPECT_EQ(t.cell({mc::kMinPosition, -mc::kMaxSpeed}), 0u);
  EXPECT_EQ(t.cell({mc::kMaxPosition, mc::kMaxSpeed}), 64u * 64u - 1);
  EXPECT_THROW(QTable(0, 4), std::invalid_argument);
}

TEST(QUpdate, MovesByAlphaFraction) {
  QTable t(2, 2);
  t.at(1, 1) = 2.0;
  q_update(t, 1, 1, 12.0, 0.1);
  EXPECT_DOUBLE_EQ(t.at(1, 1), 3.0);
}

TEST(Epsilon, LinearSchedule) {
  TrainConfig c;
  c.episodes = 100;
  EXPECT_EQ(c.epsilon(0), 1.0);
  EXPECT_DOUBLE_EQ(c.epsilon(30), 1.0 + (0.05 - 1.0) * 0.5);
  EXPECT_EQ(c.epsilon(60), 0.05);
  EXPECT_EQ(c.epsilon(99), 0.05);
}

TEST(TrainConfigTest, Validate) {
  TrainConfig c;
  c.alpha = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = TrainConfig{};
  c.kappa = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = TrainConfig{};
  c.episodes = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Train, GreedyFirstEpisodeHitsCap) {
  TrainConfig c;
  c.episodes = 1;
  c.epsilon_start = c.epsilon_end = 0.0;
  const TrainResult r = train(c, mc::SimConfig{});
  ASSERT_EQ(r.curve.size(), 1u);
  EXPECT_EQ(r.curve[0].length, 1000);
  EXPECT_EQ(r.curve[0].base_return, -1000.0);
}

TEST(Train, ZeroEpisodes) {
  TrainConfig c;
  c.episodes = 0;
  EXPECT_TRUE(train(c, mc::SimConfig{}).curve.empty());
}

TEST(Train, LengthsCapped) {
  const TrainResult r = train(small(Shaping::kOff, 1), mc::SimConfig{});
  for (const auto& e : r.curve) {
    EXPECT_LE(e.length, 1000);
    EXPECT_GE(e.length, 1);
  }
}

TEST(Train, Deterministic) {
  const TrainResult a = train(small(Shaping::kTemporal, 3), mc::SimConfig{});
  const TrainResult b = train(small(Shaping::kTemporal, 3), mc::SimConfig{});
  EXPECT_EQ(a.curve, b.curve);
  EXPECT_EQ(a.table, b.table);
  EXPECT_EQ(a.distribution, b.distribution);
}

TEST(Train, ZeroKappaMatchesUnshaped) {
  TrainConfig shaped = small(Shaping::kTemporal, 4);
  shaped.kappa = 0.0;
  const TrainResult a = train(shaped, mc::SimConfig{});
  const TrainResult b = train(small(Shaping::kOff, 4), mc::SimConfig{});
  EXPECT_EQ(a.curve, b.curve);
  EXPECT_EQ(a.table, b.table);
  EXPECT_FALSE(a.distribution.empty());
}

TEST(Train, ShapingChangesReturns) {
  const TrainResult r = train(small(Shaping::kTemporal, 5), mc::SimConfig{});
  bool differs = false;
  for (const auto& e : r.curve) differs |= e.shaped_return != e.base_return;
  EXPECT_TRUE(differs);
  for (const auto& e : r.curve) EXPECT_EQ(e.base_return, -(e.length - (e.length < 1000 ? 1.0 : 0.0)));
}

TEST(Evaluate, UntrainedTableHitsCap) {
  const QTable t(64, 64);
  EXPECT_EQ(evaluate(t, mc::SimConfig{}, 3), 1000.0);
}

TEST(Evaluate, BangBangTable) {
  // velocity >= 0 -> push right (index 2), else push left (index 0)
  QTable t(64, 64);
  for (std::size_t p = 0; p < 64; ++p) {
    for (std::size_t v = 0; v < 64; ++v) {
      const std::size_t c = p * 64 + v;
      t.at(c, v >= 32 ? 2 : 0) = 1.0;
    }
  }
  const double len = evaluate(t, mc::SimConfig{}, 2);
  EXPECT_LT(len, 1000.0);
  EXPECT_EQ(len, evaluate(t, mc::SimConfig{}, 5));
}
