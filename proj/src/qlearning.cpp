#include "canon/qlearning.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "canon/temporal.hpp"

namespace canon {

namespace mc = mountain_car;

QTable::QTable(std::size_t position_bins, std::size_t velocity_bins)
    : position_bins_(position_bins), velocity_bins_(velocity_bins), values_(position_bins * velocity_bins * kActions, 0.0) {
  if (position_bins == 0 || velocity_bins == 0) throw std::invalid_argument("q-table: bin counts must be >= 1");
}

namespace {

std::size_t bin(double value, double lo, double hi, std::size_t bins) {
  const double scaled = (value - lo) / (hi - lo) * static_cast<double>(bins);
  if (scaled <= 0.0) return 0;
  return std::min(static_cast<std::size_t>(scaled), bins - 1);
}

}  // namespace

std::size_t QTable::cell(const mc::State& state) const {
  const std::size_t p = bin(state.position, mc::kMinPosition, mc::kMaxPosition, position_bins_);
  const std::size_t v = bin(state.velocity, -mc::kMaxSpeed, mc::kMaxSpeed, velocity_bins_);
  return p * velocity_bins_ + v;
}

std::size_t QTable::greedy(std::size_t cell) const {
  std::size_t best = 0;
  for (std::size_t a = 1; a < kActions; ++a) {
    if (at(cell, a) > at(cell, best)) best = a;
  }
  return best;
}

double QTable::max_value(std::size_t cell) const { return at(cell, greedy(cell)); }

void TrainConfig::validate() const {
  if (episodes < 0) throw std::invalid_argument("train config: episodes must be >= 0");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("train config: gamma must be in (0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("train config: alpha must be in (0, 1]");
  if (!(epsilon_start >= 0.0 && epsilon_start <= 1.0 && epsilon_end >= 0.0 && epsilon_end <= 1.0)) {
    throw std::invalid_argument("train config: epsilon values must be in [0, 1]");
  }
  if (!(epsilon_decay_fraction >= 0.0 && epsilon_decay_fraction <= 1.0)) {
    throw std::invalid_argument("train config: epsilon decay fraction must be in [0, 1]");
  }
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("train config: kappa must be >= 0");
  if (position_bins == 0 || velocity_bins == 0) throw std::invalid_argument("train config: bin counts must be >= 1");
}

double TrainConfig::epsilon(int episode) const {
  const double decay_episodes = epsilon_decay_fraction * episodes;
  if (decay_episodes <= 0.0 || episode >= decay_episodes) return epsilon_end;
  return epsilon_start + (epsilon_end - epsilon_start) * (episode / decay_episodes);
}

void q_update(QTable& table, std::size_t cell, std::size_t action, double target, double alpha) {
  double& q = table.at(cell, action);
  q += alpha * (target - q);
}

TrainResult train(const TrainConfig& cfg, const mc::SimConfig& sim, EventTimeDistribution distribution,
                  const EpisodeObserver& observer) {
  cfg.validate();
  sim.validate();

  TrainResult result{QTable(cfg.position_bins, cfg.velocity_bins), {}, std::move(distribution)};
  QTable& table = result.table;
  result.curve.reserve(static_cast<std::size_t>(cfg.episodes));

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> random_action(0, QTable::kActions - 1);
  const bool shaped = cfg.shaping == Shaping::kTemporal;

  TemporalTracker tracker;
  for (int episode = 0; episode < cfg.episodes; ++episode) {
    const double epsilon = cfg.epsilon(episode);
    mc::State s{sim.start_position, 0.0};
    tracker.reset();
    tracker.observe_source(0);  // the start state is the source event

    EpisodeRecord record;
    record.episode = episode;
    for (int t = 0; t < sim.max_steps; ++t) {
      const std::size_t c = table.cell(s);
      const std::size_t a = coin(rng) < epsilon ? random_action(rng) : table.greedy(c);
      const mc::State next = mc::step(s, mc::action_from_index(static_cast<int>(a)));
      const bool done = mc::at_goal(next, sim);
      const double base = done ? 0.0 : -1.0;
      double reward = base;

      const std::int64_t now = t + 1;
      if (shaped && mc::detect_halt(next, s, now, sim)) {
        if (const auto elapsed = tracker.on_sink(now)) {
          const double elapsed_steps = static_cast<double>(*elapsed);
          const EventTimeDistribution& dist = result.distribution;
          const double reference = dist.empty() ? elapsed_steps : dist.query(next.position);
          reward += shaping_reward(elapsed_steps, reference, cfg.kappa);
          result.distribution.update({next.position, elapsed_steps});
        }
      }

      const double target = done ? reward : reward + cfg.gamma * table.max_value(table.cell(next));
      q_update(table, c, a, target, cfg.alpha);

      record.base_return += base;
      record.shaped_return += reward;
      record.length = t + 1;
      s = next;
      if (done) break;
    }
    result.curve.push_back(record);
    if (observer) observer(record, table);
  }
  return result;
}

int greedy_episode_length(const QTable& table, const mc::SimConfig& sim) {
  mc::State s{sim.start_position, 0.0};
  for (int t = 0; t < sim.max_steps; ++t) {
    s = mc::step(s, mc::action_from_index(static_cast<int>(table.greedy(table.cell(s)))));
    if (mc::at_goal(s, sim)) return t + 1;
  }
  return sim.max_steps;
}

double evaluate(const QTable& table, const mc::SimConfig& sim, int n_episodes) {
  if (n_episodes < 1) throw std::invalid_argument("evaluate: n_episodes must be >= 1");
  double total = 0.0;
  for (int i = 0; i < n_episodes; ++i) total += greedy_episode_length(table, sim);
  return total / n_episodes;
}

}  // namespace canon
