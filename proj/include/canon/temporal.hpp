#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canon/attribute_window.hpp"
#include "canon/types.hpp"

namespace canon {

/// A pre-determined situation along a trajectory.
///
/// `fires` is evaluated with the window positioned at the sample under test,
/// so it may look at earlier samples (e.g. the previous velocity) but never
/// later ones. `coordinate` maps the sample's state to the abscissa used by
/// the event-time distribution.
struct EventSpec {
  std::string id;
  std::function<bool(const AttributeWindow&)> fires;
  std::function<double(const Vec& state)> coordinate;

  /// Event defined by a predicate on the sample's current state only.
  static EventSpec on_state(std::string id, std::function<bool(const Vec&)> predicate,
                            std::function<double(const Vec&)> coordinate);
};

struct EventOccurrence {
  std::string event_id;
  std::int64_t step = 0;
  double coordinate = 0.0;
};

/// Attribute function implementing the source -> sink elapsed-step rule:
/// when `sink` fires at step k and `source` fired at some earlier step, the
/// temporal attribute is k minus the most recent such source step.
AttributeFn temporal_attribute_fn(EventSpec source, EventSpec sink);

/// Applies temporal_attribute_fn online over already-built samples (their
/// attributes are ignored). Element i is the temporal attribute of sample i.
std::vector<std::optional<std::int64_t>> record_temporal_attributes(
    std::span<const CanonicalSample> trajectory, const EventSpec& source, const EventSpec& sink);

/// All firings of `event` along the trajectory, in step order.
std::vector<EventOccurrence> find_occurrences(std::span<const CanonicalSample> trajectory,
                                              const EventSpec& event);

/// Online equivalent of temporal_attribute_fn for callers that step a plant
/// themselves and don't keep the trajectory around.
class TemporalTracker {
 public:
  void reset() { last_source_.reset(); }
  void observe_source(std::int64_t step) { last_source_ = step; }
  /// Elapsed steps for a sink at `step`, or nullopt without a prior source.
  std::optional<std::int64_t> on_sink(std::int64_t step) const;

 private:
  std::optional<std::int64_t> last_source_;
};

}  // namespace canon
