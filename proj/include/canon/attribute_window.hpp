#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>

#include "canon/types.hpp"

namespace canon {

/// Record of every read an attribute function made through its window.
struct AccessLog {
  bool future_access = false;      // read of an index > current
  bool out_of_horizon = false;     // read older than current - horizon
  std::size_t max_lookback = 0;    // largest (current - accessed) observed
  std::size_t reads = 0;
};

/// Read-only, instrumented view of one trajectory's samples up to and
/// including the current one.
///
/// The current sample carries its transition but no attribute yet. Reads of
/// later indices raise CausalityError; reads older than `current - horizon`
/// raise LocalityError. Both are recorded in the AccessLog before throwing,
/// so a caller that swallows the exception still leaves a trace.
///
/// A rebased window is centred on an earlier step (for evaluating an event
/// predicate there) but still measures lookback and horizon from the sample
/// whose attribute is being computed.
class AttributeWindow {
 public:
  /// `samples` must hold exactly the indices [0, current].
  AttributeWindow(std::span<const CanonicalSample> samples,
                  std::optional<std::size_t> horizon, AccessLog* log);

  std::size_t current_index() const { return current_; }
  std::optional<std::size_t> horizon() const { return horizon_; }

  /// Sample at trajectory position `position` (0-based).
  const CanonicalSample& at(std::size_t position) const;

  /// Sample `back` steps before the current one; back == 0 is current.
  const CanonicalSample& lookback(std::size_t back) const;

  const Transition& current() const { return at(current_).transition; }

  /// Same samples, truncated so that `position` is the current one.
  AttributeWindow rebased(std::size_t position) const;

  /// Oldest readable position under the horizon.
  std::size_t earliest() const;

 private:
  std::span<const CanonicalSample> samples_;
  std::size_t origin_;   // sample being attributed
  std::size_t current_;  // position this window is centred on (<= origin_)
  std::optional<std::size_t> horizon_;
  AccessLog* log_;
};

using AttributeFn =
    std::function<AttributeRecord(const Transition& current, const AttributeWindow& window)>;

}  // namespace canon
