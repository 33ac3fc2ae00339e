#pragma once

// Naive reference implementations used by the tests. Written from the
// definitions, deliberately sharing no code with the library beyond types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "canon/event_time.hpp"
#include "canon/types.hpp"

namespace oracle {

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

inline std::vector<double> embed(const std::vector<double>& x, const std::vector<double>& u, double beta) {
  std::vector<double> f;
  for (double v : x) f.push_back(beta * v);
  for (double v : u) f.push_back(v);
  return f;
}

// O(n^3) lower hull: after keeping the minimum time per coordinate, a point
// is a vertex unless some pair straddling it puts it on or above their chord.
inline std::vector<canon::EventPoint> lower_hull(const std::vector<canon::EventPoint>& pts) {
  std::map<double, double> best;
  for (const auto& p : pts) {
    auto it = best.find(p.coordinate);
    if (it == best.end() || p.time < it->second) best[p.coordinate] = p.time;
  }
  std::vector<canon::EventPoint> q;
  for (const auto& [c, t] : best) q.push_back({c, t});
  std::vector<canon::EventPoint> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    bool vertex = true;
    for (std::size_t a = 0; a < i && vertex; ++a) {
      for (std::size_t b = i + 1; b < q.size() && vertex; ++b) {
        const double cross = (q[b].coordinate - q[a].coordinate) * (q[i].time - q[a].time) -
                             (q[b].time - q[a].time) * (q[i].coordinate - q[a].coordinate);
        if (cross >= 0.0) vertex = false;
      }
    }
    if (vertex) out.push_back(q[i]);
  }
  return out;
}

// Most-recent-source rule applied to precomputed firing flags.
inline std::vector<std::optional<std::int64_t>> temporal(const std::vector<bool>& source,
                                                         const std::vector<bool>& sink) {
  std::vector<std::optional<std::int64_t>> out(sink.size());
  for (std::size_t k = 0; k < sink.size(); ++k) {
    if (!sink[k]) continue;
    for (std::size_t j = k; j-- > 0;) {
      if (source[j]) {
        out[k] = static_cast<std::int64_t>(k - j);
        break;
      }
    }
  }
  return out;
}

inline std::vector<std::size_t> r_neighbors(const std::vector<std::vector<double>>& features,
                                            const std::vector<double>& center, double r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (dist(features[i], center) <= r) out.push_back(i);
  }
  return out;
}

inline double point_to_dataset(const std::vector<std::vector<double>>& features,
                               const std::vector<double>& center, double r) {
  double sum = 0.0;
  std::size_t n = 0;
  double nearest = INFINITY;
  for (const auto& f : features) {
    const double d = dist(f, center);
    nearest = std::min(nearest, d);
    if (d <= r) {
      sum += d;
      ++n;
    }
  }
  return n ? sum / static_cast<double>(n) : nearest;
}

}  // namespace oracle
