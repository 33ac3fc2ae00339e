#include "canon/dataset.hpp"

#include <string>

namespace canon {

bool DatasetView::has_spatial_attributes() const {
  if (!anchors_) return false;
  for (const CanonicalSample& s : samples()) {
    if (!s.attribute.spatial || s.attribute.spatial->size() != anchors_->size()) return false;
  }
  return true;
}

CanonicalDataset::CanonicalDataset(DatasetMeta meta, std::optional<AnchorSet> anchors)
    : meta_(meta), anchors_(std::move(anchors)), storage_(std::make_shared<std::vector<CanonicalSample>>()) {
  if (meta_.state_dim == 0 || meta_.action_dim == 0) {
    throw SchemaError("dataset: state and action dimensions must be >= 1");
  }
  if (!(meta_.beta > 0.0)) throw SchemaError("dataset: beta must be > 0");
  if (anchors_) {
    if (anchors_->dim() != meta_.state_dim + meta_.action_dim) {
      throw SchemaError("dataset: anchors have dimension " + std::to_string(anchors_->dim()) +
                        ", feature space has " + std::to_string(meta_.state_dim + meta_.action_dim));
    }
    if (anchors_->beta() != meta_.beta) throw SchemaError("dataset: anchor beta differs from dataset beta");
  }
}

void CanonicalDataset::check(const CanonicalSample& sample) const {
  const Transition& t = sample.transition;
  t.validate();
  if (t.state_dim() != meta_.state_dim || t.action_dim() != meta_.action_dim) {
    throw SchemaError("dataset: sample " + std::to_string(size()) + " has (n=" + std::to_string(t.state_dim()) +
                      ", m=" + std::to_string(t.action_dim()) + "), dataset expects (n=" +
                      std::to_string(meta_.state_dim) + ", m=" + std::to_string(meta_.action_dim) + ")");
  }
  if (sample.index < 0) throw SchemaError("dataset: negative step index");
  sample.attribute.validate();
  if (sample.attribute.spatial) {
    if (!anchors_) throw SchemaError("dataset: spatial attribute on a dataset without anchors");
    if (sample.attribute.spatial->size() != anchors_->size()) {
      throw SchemaError("dataset: spatial attribute has " + std::to_string(sample.attribute.spatial->size()) +
                        " entries, dataset has " + std::to_string(anchors_->size()) + " anchors");
    }
  }
}

void CanonicalDataset::append(CanonicalSample sample) {
  check(sample);
  if (storage_.use_count() > 1) storage_ = std::make_shared<std::vector<CanonicalSample>>(*storage_);
  storage_->push_back(std::move(sample));
}

void CanonicalDataset::reserve(std::size_t n) {
  if (storage_.use_count() > 1) storage_ = std::make_shared<std::vector<CanonicalSample>>(*storage_);
  storage_->reserve(n);
}

DatasetView CanonicalDataset::view() const { return DatasetView(storage_, storage_->size(), meta_, anchors_); }

CanonicalDataset attach_spatial(const DatasetView& view, const AnchorSet& anchors) {
  DatasetMeta meta = view.meta();
  meta.beta = anchors.beta();
  CanonicalDataset out(meta, anchors);
  out.reserve(view.size());
  for (const CanonicalSample& s : view.samples()) {
    CanonicalSample copy = s;
    copy.attribute.spatial =
        compute_spatial_attribute(feature_embed(s.transition.x, s.transition.u, anchors.beta()), anchors);
    out.append(std::move(copy));
  }
  return out;
}

CanonicalDataset rescale_beta(const DatasetView& view, double new_beta) {
  if (!view.anchors()) {
    DatasetMeta meta = view.meta();
    meta.beta = new_beta;
    CanonicalDataset out(meta);
    for (const CanonicalSample& s : view.samples()) out.append(s);
    return out;
  }
  return attach_spatial(view, AnchorSet(view.anchors()->points(), new_beta));
}

}  // namespace canon
