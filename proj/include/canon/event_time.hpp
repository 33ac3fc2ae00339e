#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace canon {

struct EventPoint {
  double coordinate;
  double time;

  friend bool operator==(const EventPoint&, const EventPoint&) = default;
};

/// Piecewise-linear lower convex envelope ("inferior convex hull") of
/// (event coordinate, elapsed time) samples.
///
/// Breakpoints have strictly increasing coordinates and non-decreasing
/// slopes. Points lying exactly on a hull edge are not kept as breakpoints.
class EventTimeDistribution {
 public:
  EventTimeDistribution() = default;

  /// Throws std::invalid_argument on empty input or non-finite values.
  static EventTimeDistribution fit(std::span<const EventPoint> points);

  bool empty() const { return breakpoints_.empty(); }
  const std::vector<EventPoint>& breakpoints() const { return breakpoints_; }
  double domain_min() const { return breakpoints_.front().coordinate; }
  double domain_max() const { return breakpoints_.back().coordinate; }

  /// Interpolated minimum time; clamps to the endpoint value outside the
  /// domain. Throws std::logic_error when empty.
  double query(double coordinate) const;

  /// Same result as refitting on every point seen so far plus `point`.
  /// Returns true if the envelope changed.
  bool update(EventPoint point);

  friend bool operator==(const EventTimeDistribution&, const EventTimeDistribution&) = default;

 private:
  explicit EventTimeDistribution(std::vector<EventPoint> breakpoints)
      : breakpoints_(std::move(breakpoints)) {}

  std::vector<EventPoint> breakpoints_;
};

inline EventTimeDistribution fit_event_time_distribution(std::span<const EventPoint> points) {
  return EventTimeDistribution::fit(points);
}

inline double query_min_time(const EventTimeDistribution& dist, double coordinate) {
  return dist.query(coordinate);
}

/// Functional form of EventTimeDistribution::update.
EventTimeDistribution update_distribution_online(EventTimeDistribution dist, EventPoint point);

/// kappa * (reference - policy_elapsed): positive iff the policy was faster.
double shaping_reward(double policy_elapsed, double reference, double kappa = 1.0);

}  // namespace canon
