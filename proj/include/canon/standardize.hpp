#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "canon/attribute_window.hpp"
#include "canon/types.hpp"

namespace canon {

/// Turns a stream of (x, u, x') steps into canonical samples one at a time.
///
/// Each push() finalizes the new sample's attribute immediately; attributes
/// are never revised once emitted.
class Standardizer {
 public:
  explicit Standardizer(AttributeFn attribute_fn,
                        std::optional<std::size_t> horizon = std::nullopt);

  /// Appends one transition and returns the finished sample.
  const CanonicalSample& push(Transition transition);

  const std::vector<CanonicalSample>& samples() const { return samples_; }
  const AccessLog& access_log() const { return log_; }

  /// Start a new trajectory; indices restart at 0.
  void reset();

 private:
  AttributeFn attribute_fn_;
  std::optional<std::size_t> horizon_;
  std::vector<CanonicalSample> samples_;
  AccessLog log_;
};

/// Standardize a whole raw trajectory left to right.
///
/// Throws SchemaError on dimension mismatches, CausalityError / LocalityError
/// if the attribute function reads outside its window.
std::vector<CanonicalSample> standardize_trajectory(
    const RawTrajectory& raw, const AttributeFn& attribute_fn,
    std::optional<std::size_t> horizon = std::nullopt);

struct ContractReport {
  bool causal = true;
  bool local = true;
  std::size_t max_lookback = 0;
};

/// Runs `attribute_fn` over every probe trajectory with an unrestricted (but
/// instrumented) window and reports what it touched. `declared_horizon` of
/// nullopt means unbounded within the trajectory.
ContractReport check_attribute_contract(const AttributeFn& attribute_fn,
                                        const std::vector<RawTrajectory>& probes,
                                        std::optional<std::size_t> declared_horizon = std::nullopt);

/// An attribute function that attaches nothing.
AttributeFn empty_attributes();

/// Calls every function in turn and merges the records.
AttributeFn combine_attributes(std::vector<AttributeFn> fns);

}  // namespace canon
