#include "canon/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace canon {

RNeighborQuery::RNeighborQuery(FeatureVector c, double r) : center(std::move(c)), radius(r) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("R-neighbor query: radius must be finite and > 0");
  }
}

void SpatialIndex::load_features(const DatasetView& view, double beta) {
  size_ = view.size();
  dim_ = view.meta().state_dim + view.meta().action_dim;
  beta_ = beta;
  features_.resize(size_ * dim_);
  for (std::size_t i = 0; i < size_; ++i) {
    const Transition& t = view[i].transition;
    const FeatureVector f = feature_embed(t.x, t.u, beta_);
    std::copy(f.values.begin(), f.values.end(), features_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
  }
}

SpatialIndex SpatialIndex::features_only(const DatasetView& view, std::optional<double> beta) {
  SpatialIndex index;
  index.load_features(view, beta.value_or(view.meta().beta));
  return index;
}

SpatialIndex::SpatialIndex(const DatasetView& view) {
  if (!view.anchors()) throw PreconditionError("spatial index: dataset has no anchor set");
  if (!view.has_spatial_attributes()) {
    throw PreconditionError("spatial index: some samples lack a spatial attribute");
  }
  if (view.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw PreconditionError("spatial index: more than 2^32 samples");
  }
  load_features(view, view.meta().beta);
  anchors_ = *view.anchors();
  const std::size_t k_count = anchors_->size();

  order_.resize(size_);
  std::iota(order_.begin(), order_.end(), 0u);
  std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
    return (*view[a].attribute.spatial)[0] < (*view[b].attribute.spatial)[0];
  });

  first_key_.resize(size_);
  keys_.resize((k_count - 1) * size_);
  attributes_.resize(k_count * size_);
  max_attr_.assign(k_count, 0.0);
  for (std::size_t pos = 0; pos < size_; ++pos) {
    const Vec& attr = *view[order_[pos]].attribute.spatial;
    first_key_[pos] = attr[0];
    for (std::size_t k = 1; k < k_count; ++k) keys_[(k - 1) * size_ + pos] = static_cast<float>(attr[k]);
    std::copy(attr.begin(), attr.end(), attributes_.begin() + static_cast<std::ptrdiff_t>(pos * k_count));
    for (std::size_t k = 0; k < k_count; ++k) max_attr_[k] = std::max(max_attr_[k], attr[k]);
  }
}

double SpatialIndex::band(std::size_t anchor, double radius) const {
  return rounding_band(radius, dim_, max_attr_[anchor]);
}

const AnchorSet& SpatialIndex::anchors() const {
  if (!anchors_) throw PreconditionError("spatial index: built without anchors");
  return *anchors_;
}

std::vector<std::size_t> SpatialIndex::bruteforce(const RNeighborQuery& query) const {
  if (query.center.size() != dim_) throw std::invalid_argument("R-neighbor query: center dimension mismatch");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (euclidean_distance(feature(i), query.center.values) <= query.radius) out.push_back(i);
  }
  return out;
}

SearchReport SpatialIndex::filtered(const RNeighborQuery& query) const {
  if (!anchors_) throw PreconditionError("filtered search: index has no spatial attributes");
  if (query.center.size() != dim_) throw std::invalid_argument("R-neighbor query: center dimension mismatch");

  const auto start = std::chrono::steady_clock::now();
  const std::size_t k_count = anchors_->size();
  const Vec center_attr = compute_spatial_attribute(query.center, *anchors_);
  Vec bands(k_count);
  for (std::size_t k = 0; k < k_count; ++k) bands[k] = band(k, query.radius);

  // Anchor 0: the sorted keys turn |a - c| <= band into one contiguous range.
  // The range is slightly generous; the exact pass below settles the edges.
  const double b0 = bands[0] * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
  const auto lo = std::lower_bound(first_key_.begin(), first_key_.end(), center_attr[0] - b0);
  const auto hi = std::upper_bound(lo, first_key_.end(), center_attr[0] + b0);

  thread_local std::vector<std::uint32_t> survivors;
  survivors.resize(static_cast<std::size_t>(hi - lo));
  std::size_t count = 0;
  for (auto it = lo; it != hi; ++it) survivors[count++] = static_cast<std::uint32_t>(it - first_key_.begin());

  // Anchors 1..: single-precision sweep. Each band is widened by the float
  // rounding of both keys and of their difference, so no row that passes the
  // double-precision condition is dropped here.
  constexpr double kFloatRel = 8.0 * std::numeric_limits<float>::epsilon();
  for (std::size_t k = 1; k < k_count && count > 0; ++k) {
    const float* column = keys_.data() + (k - 1) * size_;
    const float c = static_cast<float>(center_attr[k]);
    const float r = std::nextafter(static_cast<float>(bands[k] + kFloatRel * (max_attr_[k] + bands[k])),
                                   std::numeric_limits<float>::infinity());
    std::size_t kept = 0;
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint32_t pos = survivors[j];
      survivors[kept] = pos;
      kept += std::abs(column[pos] - c) <= r ? 1 : 0;
    }
    count = kept;
  }

  SearchReport report;
  report.total = size_;
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint32_t pos = survivors[j];
    const double* attr = attributes_.data() + static_cast<std::size_t>(pos) * k_count;
    bool pass = true;
    for (std::size_t k = 0; k < k_count && pass; ++k) pass = std::abs(attr[k] - center_attr[k]) <= bands[k];
    if (!pass) continue;
    ++report.candidates_after_filter;
    const std::size_t i = order_[pos];
    if (euclidean_distance(feature(i), query.center.values) <= query.radius) report.result_indices.push_back(i);
  }
  std::sort(report.result_indices.begin(), report.result_indices.end());
  report.reject_ratio =
      size_ == 0 ? 0.0
                 : static_cast<double>(size_ - report.candidates_after_filter) / static_cast<double>(size_);
  report.wall_time_filtered =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::pair<std::size_t, double> SpatialIndex::nearest(const FeatureVector& center) const {
  if (size_ == 0) throw PreconditionError("nearest: empty index");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size_; ++i) {
    const double d = euclidean_distance(feature(i), center.values);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return {best, best_d};
}

std::vector<std::size_t> r_neighbor_bruteforce(const DatasetView& view, const RNeighborQuery& query) {
  const double beta = view.meta().beta;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    const Transition& t = view[i].transition;
    const FeatureVector f = feature_embed(t.x, t.u, beta);
    if (f.size() != query.center.size()) throw std::invalid_argument("R-neighbor query: center dimension mismatch");
    if (euclidean_distance(f.values, query.center.values) <= query.radius) out.push_back(i);
  }
  return out;
}

SearchReport r_neighbor_filtered(const DatasetView& view, const RNeighborQuery& query) {
  return SpatialIndex(view).filtered(query);
}

double point_to_dataset_distance(const SpatialIndex& index, std::span<const double> x_c,
                                 std::span<const double> u_c, double radius) {
  if (index.size() == 0) throw PreconditionError("point-to-dataset distance: empty dataset");
  const RNeighborQuery query(feature_embed(x_c, u_c, index.beta()), radius);
  if (query.center.size() != index.dim()) {
    throw std::invalid_argument("point-to-dataset distance: center dimension mismatch");
  }
  const std::vector<std::size_t> neighbors =
      index.has_attributes() ? index.filtered(query).result_indices : index.bruteforce(query);
  if (neighbors.empty()) return index.nearest(query.center).second;
  double sum = 0.0;
  for (std::size_t i : neighbors) sum += euclidean_distance(index.feature(i), query.center.values);
  return sum / static_cast<double>(neighbors.size());
}

namespace {

SpatialIndex index_for(const DatasetView& view, double beta) {
  if (view.empty()) throw PreconditionError("point-to-dataset distance: empty dataset");
  if (beta == view.meta().beta && view.has_spatial_attributes()) return SpatialIndex(view);
  return SpatialIndex::features_only(view, beta);
}

}  // namespace

double point_to_dataset_distance(const DatasetView& view, std::span<const double> x_c,
                                 std::span<const double> u_c, double radius, double beta) {
  return point_to_dataset_distance(index_for(view, beta), x_c, u_c, radius);
}

double dataset_constraint_loss(const SpatialIndex& index, std::span<const double> x_c,
                               std::span<const double> u_proposed, double radius) {
  return point_to_dataset_distance(index, x_c, u_proposed, radius);
}

double dataset_constraint_loss(const DatasetView& view, std::span<const double> x_c,
                               std::span<const double> u_proposed, double radius, double beta) {
  return point_to_dataset_distance(view, x_c, u_proposed, radius, beta);
}

}  // namespace canon
