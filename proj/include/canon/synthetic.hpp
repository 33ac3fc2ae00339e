#pragma once

#include <cstddef>
#include <cstdint>

#include "canon/dataset.hpp"

namespace canon {

/// Gaussian-mixture stand-in for a recorded replay buffer.
///
/// Cluster centres live in feature space: the state block (after
/// multiplication by beta) is N(0, state_scale^2) per coordinate, the action
/// block uniform in [-action_extent, action_extent]. Each sample picks a
/// cluster uniformly and scatters around its centre with standard deviation
/// `spread` per feature coordinate. x_next = x plus a small drift.
struct ClusteredConfig {
  std::size_t n_samples = 401'598;
  std::size_t state_dim = 11;
  std::size_t action_dim = 3;
  std::size_t clusters = 2000;
  double spread = 0.05;
  double state_scale = 1.0;
  double action_extent = 1.0;
  double beta = 0.2;
  std::uint64_t seed = 0;
};

/// Deterministic for a given config; axis anchors and spatial attributes are
/// attached. Throws std::invalid_argument if n_samples == 0 or clusters == 0.
CanonicalDataset generate_clustered_dataset(const ClusteredConfig& cfg);

}  // namespace canon
