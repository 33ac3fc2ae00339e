#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "canon/event_time.hpp"
#include "canon/mountain_car.hpp"

namespace canon {

/// State-action values over a uniform grid on the MountainCar state box.
class QTable {
 public:
  static constexpr std::size_t kActions = 3;

  QTable(std::size_t position_bins, std::size_t velocity_bins);

  std::size_t position_bins() const { return position_bins_; }
  std::size_t velocity_bins() const { return velocity_bins_; }

  std::size_t cell(const mountain_car::State& state) const;
  double& at(std::size_t cell, std::size_t action) { return values_[cell * kActions + action]; }
  double at(std::size_t cell, std::size_t action) const { return values_[cell * kActions + action]; }

  /// Highest-valued action; lowest index wins ties.
  std::size_t greedy(std::size_t cell) const;
  double max_value(std::size_t cell) const;

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t position_bins_;
  std::size_t velocity_bins_;
  std::vector<double> values_;
};

enum class Shaping { kOff, kTemporal };

struct TrainConfig {
  int episodes = 2000;
  double gamma = 0.99;
  double alpha = 0.1;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  double epsilon_decay_fraction = 0.6;
  Shaping shaping = Shaping::kOff;
  double kappa = 1.0;
  std::size_t position_bins = 64;
  std::size_t velocity_bins = 64;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
  /// Exploration rate for a 0-based episode.
  double epsilon(int episode) const;
};

struct EpisodeRecord {
  int episode = 0;
  int length = 0;
  double shaped_return = 0.0;
  double base_return = 0.0;

  friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

struct TrainResult {
  QTable table;
  std::vector<EpisodeRecord> curve;
  EventTimeDistribution distribution;
};

/// Called after every episode with the table as it stands.
using EpisodeObserver = std::function<void(const EpisodeRecord&, const QTable&)>;

/// Tabular Q-learning on MountainCar with optional temporal shaping.
///
/// Base reward is -1 per step and 0 on the step that reaches the goal. With
/// temporal shaping every halt adds kappa * (reference - elapsed) where the
/// reference is the distribution's value at the halt position (zero while the
/// distribution is still empty); the halt then joins the distribution.
TrainResult train(const TrainConfig& cfg, const mountain_car::SimConfig& sim,
                  EventTimeDistribution distribution = {},
                  const EpisodeObserver& observer = {});

/// One step of Q-learning: Q(s,a) += alpha * (target - Q(s,a)).
void q_update(QTable& table, std::size_t cell, std::size_t action, double target, double alpha);

/// Greedy episode length from the start state (capped at max_steps).
int greedy_episode_length(const QTable& table, const mountain_car::SimConfig& sim);

/// Mean greedy episode length over n_episodes.
double evaluate(const QTable& table, const mountain_car::SimConfig& sim, int n_episodes = 1);

}  // namespace canon
