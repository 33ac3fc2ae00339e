#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "canon/anchors.hpp"
#include "canon/dataset.hpp"

namespace canon {

struct RNeighborQuery {
  FeatureVector center;
  double radius;

  /// Throws std::invalid_argument unless radius > 0 and finite.
  RNeighborQuery(FeatureVector center, double radius);
};

struct SearchReport {
  std::vector<std::size_t> result_indices;  // ascending
  std::size_t candidates_after_filter = 0;
  std::size_t total = 0;
  double reject_ratio = 0.0;
  std::chrono::nanoseconds wall_time_filtered{0};
  std::optional<std::chrono::nanoseconds> wall_time_bruteforce;
};

/// Flat, query-ready copy of a dataset snapshot.
///
/// Samples are kept sorted by their distance to the first anchor, so that
/// anchor's condition reduces to a binary-searched band. The remaining anchors
/// are swept column by column in anchor order over the shrinking survivor
/// list, first on compact single-precision keys (band widened to cover their
/// rounding), then re-checked exactly in double on the few survivors. The
/// reported candidate count is the exact double-precision filter count.
class SpatialIndex {
 public:
  /// Features embedded with `beta` (the dataset's own when omitted);
  /// filtered() will throw PreconditionError.
  static SpatialIndex features_only(const DatasetView& view, std::optional<double> beta = std::nullopt);

  /// Throws PreconditionError if the view lacks anchors or attributes.
  explicit SpatialIndex(const DatasetView& view);

  std::size_t size() const { return size_; }
  std::size_t dim() const { return dim_; }
  double beta() const { return beta_; }
  bool has_attributes() const { return anchors_.has_value(); }
  const AnchorSet& anchors() const;

  std::span<const double> feature(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }

  /// {i : ||feature_i - center|| <= radius}, ascending. Checks every sample.
  std::vector<std::size_t> bruteforce(const RNeighborQuery& query) const;

  /// Anchor filter followed by an exact distance check on the survivors.
  SearchReport filtered(const RNeighborQuery& query) const;

  /// Index of the nearest sample (lowest index on ties) and its distance.
  std::pair<std::size_t, double> nearest(const FeatureVector& center) const;

 private:
  SpatialIndex() = default;
  void load_features(const DatasetView& view, double beta);
  // Filter threshold for one anchor: rounding_band over the column maximum.
  double band(std::size_t anchor, double radius) const;

  std::size_t size_ = 0;
  std::size_t dim_ = 0;
  double beta_ = 1.0;
  std::vector<double> features_;  // row-major, dataset order
  std::optional<AnchorSet> anchors_;
  std::vector<std::uint32_t> order_;  // sorted position -> dataset index
  std::vector<double> first_key_;     // first-anchor distance, sorted
  std::vector<float> keys_;           // anchors 1.., anchor-major, sorted order
  std::vector<double> attributes_;    // row-major, sorted order
  std::vector<double> max_attr_;      // per-anchor column maximum
};

/// Oracle: exact R-neighbor set by checking every sample of the view.
std::vector<std::size_t> r_neighbor_bruteforce(const DatasetView& view, const RNeighborQuery& query);

/// Filtered search over the view (builds a SpatialIndex internally).
SearchReport r_neighbor_filtered(const DatasetView& view, const RNeighborQuery& query);

/// Mean distance from (x_c, u_c) to its R-neighbors; falls back to the
/// distance to the single nearest sample when no neighbor lies within R.
/// Throws PreconditionError on an empty index.
double point_to_dataset_distance(const SpatialIndex& index, std::span<const double> x_c,
                                 std::span<const double> u_c, double radius);
double point_to_dataset_distance(const DatasetView& view, std::span<const double> x_c,
                                 std::span<const double> u_c, double radius, double beta);

/// Dataset-constraint loss value for proposing `u_proposed` at `x_c`.
double dataset_constraint_loss(const SpatialIndex& index, std::span<const double> x_c,
                               std::span<const double> u_proposed, double radius);
double dataset_constraint_loss(const DatasetView& view, std::span<const double> x_c,
                               std::span<const double> u_proposed, double radius, double beta);

}  // namespace canon
