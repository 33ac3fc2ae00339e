#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "canon/anchors.hpp"
#include "canon/types.hpp"

namespace canon {

struct DatasetMeta {
  std::size_t state_dim = 0;
  std::size_t action_dim = 0;
  double beta = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

/// Immutable snapshot of a dataset at the length it had when taken. Cheap to
/// copy; safe to share across threads.
class DatasetView {
 public:
  DatasetView() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const CanonicalSample& operator[](std::size_t i) const { return (*storage_)[i]; }
  std::span<const CanonicalSample> samples() const {
    return storage_ ? std::span<const CanonicalSample>(storage_->data(), size_)
                    : std::span<const CanonicalSample>();
  }

  const DatasetMeta& meta() const { return meta_; }
  const std::optional<AnchorSet>& anchors() const { return anchors_; }

  /// True when an anchor set is present and every sample carries a spatial
  /// attribute of matching length.
  bool has_spatial_attributes() const;

 private:
  friend class CanonicalDataset;
  DatasetView(std::shared_ptr<const std::vector<CanonicalSample>> storage, std::size_t size,
              DatasetMeta meta, std::optional<AnchorSet> anchors)
      : storage_(std::move(storage)), size_(size), meta_(meta), anchors_(std::move(anchors)) {}

  std::shared_ptr<const std::vector<CanonicalSample>> storage_;
  std::size_t size_ = 0;
  DatasetMeta meta_;
  std::optional<AnchorSet> anchors_;
};

/// Append-only collection of canonical samples.
///
/// Single writer. Views handed out earlier keep observing the length they
/// were taken at; storage is copied on the first append after a view is
/// still alive.
class CanonicalDataset {
 public:
  /// Throws SchemaError if dims are zero or the anchors do not live in the
  /// (n + m)-dim feature space, or use a different beta than `meta`.
  explicit CanonicalDataset(DatasetMeta meta, std::optional<AnchorSet> anchors = std::nullopt);

  /// Throws SchemaError if the sample does not match the dataset schema.
  void append(CanonicalSample sample);
  void reserve(std::size_t n);

  std::size_t size() const { return storage_->size(); }
  const DatasetMeta& meta() const { return meta_; }
  const std::optional<AnchorSet>& anchors() const { return anchors_; }

  DatasetView view() const;

 private:
  void check(const CanonicalSample& sample) const;

  DatasetMeta meta_;
  std::optional<AnchorSet> anchors_;
  std::shared_ptr<std::vector<CanonicalSample>> storage_;
};

/// Copy of `view` re-embedded under a new beta: anchors keep their positions,
/// every spatial attribute is recomputed against (new_beta * x) ++ u.
CanonicalDataset rescale_beta(const DatasetView& view, double new_beta);

/// Copy of `view` with spatial attributes (re)computed for `anchors`.
CanonicalDataset attach_spatial(const DatasetView& view, const AnchorSet& anchors);

}  // namespace canon
