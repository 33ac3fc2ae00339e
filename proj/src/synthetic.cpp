#include "canon/synthetic.hpp"

#include <random>
#include <stdexcept>

namespace canon {

CanonicalDataset generate_clustered_dataset(const ClusteredConfig& cfg) {
  if (cfg.n_samples == 0) throw std::invalid_argument("clustered dataset: n_samples must be >= 1");
  if (cfg.clusters == 0) throw std::invalid_argument("clustered dataset: clusters must be >= 1");
  if (cfg.spread < 0.0) throw std::invalid_argument("clustered dataset: spread must be >= 0");

  const std::size_t n = cfg.state_dim;
  const std::size_t m = cfg.action_dim;
  const AnchorSet anchors = make_axis_anchors(n, m, cfg.beta);
  CanonicalDataset dataset(DatasetMeta{n, m, cfg.beta, cfg.seed}, anchors);
  dataset.reserve(cfg.n_samples);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> action_box(-cfg.action_extent, cfg.action_extent);
  std::normal_distribution<double> unit(0.0, 1.0);

  // Centres in feature coordinates.
  std::vector<Vec> centres(cfg.clusters, Vec(n + m));
  for (Vec& c : centres) {
    for (std::size_t j = 0; j < n; ++j) c[j] = cfg.state_scale * unit(rng);
    for (std::size_t j = n; j < n + m; ++j) c[j] = action_box(rng);
  }

  std::uniform_int_distribution<std::size_t> pick(0, cfg.clusters - 1);
  for (std::size_t i = 0; i < cfg.n_samples; ++i) {
    const Vec& c = centres[pick(rng)];
    CanonicalSample sample;
    sample.index = static_cast<std::int64_t>(i);
    Transition& t = sample.transition;
    t.x.resize(n);
    t.u.resize(m);
    t.x_next.resize(n);
    for (std::size_t j = 0; j < n; ++j) t.x[j] = (c[j] + cfg.spread * unit(rng)) / cfg.beta;
    for (std::size_t j = 0; j < m; ++j) t.u[j] = c[n + j] + cfg.spread * unit(rng);
    for (std::size_t j = 0; j < n; ++j) t.x_next[j] = t.x[j] + 0.1 * cfg.spread / cfg.beta * unit(rng);
    sample.attribute.spatial = compute_spatial_attribute(feature_embed(t.x, t.u, cfg.beta), anchors);
    dataset.append(std::move(sample));
  }
  return dataset;
}

}  // namespace canon
