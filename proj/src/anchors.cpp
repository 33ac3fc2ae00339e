#include "canon/anchors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace canon {

AnchorSet::AnchorSet(std::vector<Vec> anchors, double beta) : anchors_(std::move(anchors)), beta_(beta) {
  if (!(beta_ > 0.0) || !std::isfinite(beta_)) throw std::invalid_argument("anchor set: beta must be > 0");
  if (anchors_.empty()) throw std::invalid_argument("anchor set: no anchors");
  const std::size_t d = anchors_.front().size();
  if (d == 0) throw std::invalid_argument("anchor set: zero-dimensional anchors");
  for (const Vec& a : anchors_) {
    if (a.size() != d) throw std::invalid_argument("anchor set: ragged anchor dimensions");
    if (!std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); })) {
      throw std::invalid_argument("anchor set: non-finite anchor coordinate");
    }
  }
  std::vector<Vec> sorted = anchors_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("anchor set: anchors must be pairwise distinct");
  }
}

AnchorSet AnchorSet::with_anchor(Vec anchor) const {
  std::vector<Vec> points = anchors_;
  points.push_back(std::move(anchor));
  return AnchorSet(std::move(points), beta_);
}

AnchorSet make_axis_anchors(std::size_t state_dim, std::size_t action_dim, double beta) {
  if (state_dim + action_dim == 0) throw std::invalid_argument("axis anchors: empty feature space");
  const std::size_t d = state_dim + action_dim;
  std::vector<Vec> points;
  points.reserve(2 * d + 1);
  points.emplace_back(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec e(d, 0.0);
      e[i] = sign;
      points.push_back(std::move(e));
    }
  }
  return AnchorSet(std::move(points), beta);
}

FeatureVector feature_embed(std::span<const double> x, std::span<const double> u, double beta) {
  FeatureVector f;
  f.values.reserve(x.size() + u.size());
  for (double v : x) f.values.push_back(beta * v);
  f.values.insert(f.values.end(), u.begin(), u.end());
  return f;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

Vec compute_spatial_attribute(const FeatureVector& feature, const AnchorSet& anchors) {
  if (feature.size() != anchors.dim()) {
    throw std::invalid_argument("spatial attribute: feature has " + std::to_string(feature.size()) +
                                " entries, anchors have " + std::to_string(anchors.dim()));
  }
  Vec out;
  out.reserve(anchors.size());
  for (const Vec& a : anchors.points()) out.push_back(euclidean_distance(feature.values, a));
  return out;
}

bool filter_pass(std::span<const double> candidate_attr, std::span<const double> center_attr, double radius) {
  if (candidate_attr.size() != center_attr.size()) {
    throw std::invalid_argument("filter_pass: attribute lengths differ");
  }
  for (std::size_t i = 0; i < candidate_attr.size(); ++i) {
    if (std::abs(candidate_attr[i] - center_attr[i]) > radius) return false;
  }
  return true;
}

double rounding_band(double radius, std::size_t feature_dim, double attr_scale) {
  const double rel = 4.0 * static_cast<double>(feature_dim + 2) * std::numeric_limits<double>::epsilon();
  return radius + rel * (2.0 * attr_scale + radius);
}

bool filter_pass_rounded(std::span<const double> candidate_attr, std::span<const double> center_attr, double radius,
                         std::size_t feature_dim) {
  if (candidate_attr.size() != center_attr.size()) {
    throw std::invalid_argument("filter_pass: attribute lengths differ");
  }
  for (std::size_t i = 0; i < candidate_attr.size(); ++i) {
    const double band = rounding_band(radius, feature_dim, std::max(candidate_attr[i], center_attr[i]));
    if (std::abs(candidate_attr[i] - center_attr[i]) > band) return false;
  }
  return true;
}

}  // namespace canon
