#pragma once

#include <cstdint>
#include <random>

#include "canon/temporal.hpp"
#include "canon/types.hpp"

namespace canon::mountain_car {

inline constexpr double kMinPosition = -1.2;
inline constexpr double kMaxPosition = 0.6;
inline constexpr double kMaxSpeed = 0.07;
inline constexpr double kForce = 0.001;
inline constexpr double kGravity = 0.0025;

struct State {
  double position = -0.5;
  double velocity = 0.0;

  Vec to_vec() const { return {position, velocity}; }
  static State from_vec(const Vec& v);

  friend bool operator==(const State&, const State&) = default;
};

struct SimConfig {
  double start_position = -0.5;
  double goal_position = 0.5;
  int max_steps = 1000;
  // Largest one-step velocity change is kForce + kGravity, so every zero
  // crossing lands within this band.
  double halt_velocity_eps = kForce + kGravity;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument if max_steps < 1 or eps < 0.
  void validate() const;
};

/// Action in {-1, 0, +1}; throws std::invalid_argument otherwise.
State step(const State& state, int action);

/// Index 0, 1, 2 <-> force -1, 0, +1.
inline int action_from_index(int index) { return index - 1; }
inline int index_from_action(int action) { return action + 1; }

bool at_goal(const State& state, const SimConfig& cfg);

/// The car came to rest at a turning point short of the goal: the velocity
/// changed sign (or hit zero) between `prev` and `state`, |velocity| is within
/// the halt band, and step >= 1.
bool detect_halt(const State& state, const State& prev, std::int64_t step, const SimConfig& cfg);

/// Source event: the initial bottom state at step 0.
EventSpec start_event(const SimConfig& cfg);
/// Sink event: detect_halt on the sample's state; coordinate = position.
EventSpec halt_event(const SimConfig& cfg);

enum class Policy { kZero, kPushRight, kBangBang, kRandom };

/// Roll out from the start state until the goal or max_steps.
RawTrajectory rollout(const SimConfig& cfg, Policy policy, std::uint64_t seed = 0);

}  // namespace canon::mountain_car
