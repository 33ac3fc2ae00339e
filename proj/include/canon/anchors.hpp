#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "canon/types.hpp"

namespace canon {

/// Concatenated feature (beta * x) ++ u.
struct FeatureVector {
  Vec values;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Fixed pivot points in feature space together with the state/action
/// weighting they were built for.
class AnchorSet {
 public:
  /// Throws std::invalid_argument if anchors is empty, ragged, non-finite,
  /// contains duplicates, or beta <= 0.
  AnchorSet(std::vector<Vec> anchors, double beta);

  std::size_t size() const { return anchors_.size(); }
  std::size_t dim() const { return anchors_.front().size(); }
  double beta() const { return beta_; }
  const Vec& operator[](std::size_t i) const { return anchors_[i]; }
  const std::vector<Vec>& points() const { return anchors_; }

  /// Copy with one more anchor appended.
  AnchorSet with_anchor(Vec anchor) const;

  friend bool operator==(const AnchorSet&, const AnchorSet&) = default;

 private:
  std::vector<Vec> anchors_;
  double beta_;
};

/// Origin plus +-e_i for every axis of the (n + m)-dim feature space, in the
/// order 0, +e_1, -e_1, +e_2, -e_2, ...
AnchorSet make_axis_anchors(std::size_t state_dim, std::size_t action_dim, double beta);

FeatureVector feature_embed(std::span<const double> x, std::span<const double> u, double beta);

/// Euclidean distance. Every search path uses this one routine so that the
/// oracle and the filtered path agree to the last bit.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Distance from the feature to every anchor, in anchor order.
Vec compute_spatial_attribute(const FeatureVector& feature, const AnchorSet& anchors);

/// Spatial filter condition: |candidate_i - center_i| <= radius for all i.
/// Throws std::invalid_argument on length mismatch.
bool filter_pass(std::span<const double> candidate_attr, std::span<const double> center_attr,
                 double radius);

/// Radius widened by a bound on the rounding error of the quantities being
/// compared: two anchor distances up to `attr_scale` and the radius itself,
/// all computed over `feature_dim` coordinates. A pair at distance exactly R
/// (where the triangle inequality is tight) then still passes.
double rounding_band(double radius, std::size_t feature_dim, double attr_scale);

/// filter_pass as the search evaluates it: each anchor uses rounding_band.
bool filter_pass_rounded(std::span<const double> candidate_attr, std::span<const double> center_attr,
                         double radius, std::size_t feature_dim);

}  // namespace canon
