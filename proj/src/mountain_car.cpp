#include "canon/mountain_car.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace canon::mountain_car {

State State::from_vec(const Vec& v) {
  if (v.size() != 2) throw std::invalid_argument("mountain car state needs 2 entries, got " + std::to_string(v.size()));
  return State{v[0], v[1]};
}

void SimConfig::validate() const {
  if (max_steps < 1) throw std::invalid_argument("sim config: max_steps must be >= 1");
  if (!(halt_velocity_eps >= 0.0)) throw std::invalid_argument("sim config: halt_velocity_eps must be >= 0");
}

State step(const State& state, int action) {
  if (action < -1 || action > 1) {
    throw std::invalid_argument("mountain car: action must be -1, 0 or +1, got " + std::to_string(action));
  }
  double velocity = state.velocity + kForce * action - kGravity * std::cos(3.0 * state.position);
  velocity = std::clamp(velocity, -kMaxSpeed, kMaxSpeed);
  double position = std::clamp(state.position + velocity, kMinPosition, kMaxPosition);
  if (position == kMinPosition && velocity < 0.0) velocity = 0.0;  // inelastic left wall
  return State{position, velocity};
}

bool at_goal(const State& state, const SimConfig& cfg) { return state.position >= cfg.goal_position; }

bool detect_halt(const State& state, const State& prev, std::int64_t step, const SimConfig& cfg) {
  if (step < 1) return false;
  if (state.position >= cfg.goal_position) return false;
  if (std::abs(state.velocity) > cfg.halt_velocity_eps) return false;
  const bool turned = (prev.velocity > 0.0 && state.velocity <= 0.0) || (prev.velocity < 0.0 && state.velocity >= 0.0);
  return turned;
}

EventSpec start_event(const SimConfig& cfg) {
  EventSpec spec;
  spec.id = "start";
  spec.fires = [start = cfg.start_position](const AttributeWindow& w) {
    if (w.current_index() != 0) return false;
    const Vec& x = w.current().x;
    return x.size() == 2 && x[0] == start && x[1] == 0.0;
  };
  spec.coordinate = [](const Vec& x) { return x.at(0); };
  return spec;
}

EventSpec halt_event(const SimConfig& cfg) {
  EventSpec spec;
  spec.id = "halt";
  spec.fires = [cfg](const AttributeWindow& w) {
    const std::size_t i = w.current_index();
    if (i == 0) return false;
    const State prev = State::from_vec(w.at(i - 1).transition.x);
    const State cur = State::from_vec(w.current().x);
    return detect_halt(cur, prev, static_cast<std::int64_t>(i), cfg);
  };
  spec.coordinate = [](const Vec& x) { return x.at(0); };
  return spec;
}

RawTrajectory rollout(const SimConfig& cfg, Policy policy, std::uint64_t seed) {
  cfg.validate();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-1, 1);
  RawTrajectory raw;
  State s{cfg.start_position, 0.0};
  raw.states.push_back(s.to_vec());
  for (int t = 0; t < cfg.max_steps && !at_goal(s, cfg); ++t) {
    int action = 0;
    switch (policy) {
      case Policy::kZero: action = 0; break;
      case Policy::kPushRight: action = 1; break;
      case Policy::kBangBang: action = s.velocity >= 0.0 ? 1 : -1; break;
      case Policy::kRandom: action = pick(rng); break;
    }
    s = step(s, action);
    raw.actions.push_back({static_cast<double>(action)});
    raw.states.push_back(s.to_vec());
  }
  return raw;
}

}  // namespace canon::mountain_car
