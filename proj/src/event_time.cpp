#include "canon/event_time.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace canon {

namespace {

// > 0 when o -> a -> b turns counter-clockwise.
double cross(const EventPoint& o, const EventPoint& a, const EventPoint& b) {
  return (a.coordinate - o.coordinate) * (b.time - o.time) - (a.time - o.time) * (b.coordinate - o.coordinate);
}

// Monotone-chain lower hull. Input must be sorted by (coordinate, time).
std::vector<EventPoint> lower_hull(const std::vector<EventPoint>& sorted) {
  std::vector<EventPoint> hull;
  hull.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const EventPoint& p = sorted[i];
    // Only the lowest time at a coordinate can be on the envelope.
    if (i > 0 && sorted[i - 1].coordinate == p.coordinate) continue;
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

bool point_order(const EventPoint& a, const EventPoint& b) {
  return a.coordinate < b.coordinate || (a.coordinate == b.coordinate && a.time < b.time);
}

}  // namespace

EventTimeDistribution EventTimeDistribution::fit(std::span<const EventPoint> points) {
  if (points.empty()) throw std::invalid_argument("event-time fit: no points");
  std::vector<EventPoint> sorted(points.begin(), points.end());
  for (const EventPoint& p : sorted) {
    if (!std::isfinite(p.coordinate) || !std::isfinite(p.time)) {
      throw std::invalid_argument("event-time fit: non-finite point");
    }
  }
  std::sort(sorted.begin(), sorted.end(), point_order);
  return EventTimeDistribution(lower_hull(sorted));
}

double EventTimeDistribution::query(double coordinate) const {
  if (breakpoints_.empty()) throw std::logic_error("event-time query on an empty distribution");
  if (coordinate <= breakpoints_.front().coordinate) return breakpoints_.front().time;
  if (coordinate >= breakpoints_.back().coordinate) return breakpoints_.back().time;
  const auto hi = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), coordinate,
                                   [](const EventPoint& p, double c) { return p.coordinate < c; });
  if (hi->coordinate == coordinate) return hi->time;
  const auto lo = hi - 1;
  const double t = (coordinate - lo->coordinate) / (hi->coordinate - lo->coordinate);
  return lo->time + t * (hi->time - lo->time);
}

bool EventTimeDistribution::update(EventPoint point) {
  if (!std::isfinite(point.coordinate) || !std::isfinite(point.time)) {
    throw std::invalid_argument("event-time update: non-finite point");
  }
  if (breakpoints_.empty()) {
    breakpoints_.push_back(point);
    return true;
  }
  // Non-vertices of the old set stay non-vertices, so the vertices plus the
  // new point determine the same hull as the full history.
  std::vector<EventPoint> merged = breakpoints_;
  merged.insert(std::upper_bound(merged.begin(), merged.end(), point, point_order), point);
  std::vector<EventPoint> hull = lower_hull(merged);
  if (hull == breakpoints_) return false;
  breakpoints_ = std::move(hull);
  return true;
}

EventTimeDistribution update_distribution_online(EventTimeDistribution dist, EventPoint point) {
  dist.update(point);
  return dist;
}

double shaping_reward(double policy_elapsed, double reference, double kappa) {
  return kappa * (reference - policy_elapsed);
}

}  // namespace canon
