#include "canon/temporal.hpp"

#include <utility>

namespace canon {

EventSpec EventSpec::on_state(std::string id, std::function<bool(const Vec&)> predicate,
                              std::function<double(const Vec&)> coordinate) {
  EventSpec spec;
  spec.id = std::move(id);
  spec.fires = [predicate = std::move(predicate)](const AttributeWindow& w) { return predicate(w.current().x); };
  spec.coordinate = std::move(coordinate);
  return spec;
}

AttributeFn temporal_attribute_fn(EventSpec source, EventSpec sink) {
  return [source = std::move(source), sink = std::move(sink)](const Transition&, const AttributeWindow& window) {
    AttributeRecord record;
    if (!sink.fires(window)) return record;
    const std::size_t now = window.current_index();
    // Most recent strictly earlier source firing gives the shortest A -> B time.
    for (std::size_t j = now; j-- > window.earliest();) {
      if (source.fires(window.rebased(j))) {
        record.temporal = static_cast<std::int64_t>(now - j);
        break;
      }
    }
    return record;
  };
}

namespace {

std::vector<CanonicalSample> strip_attributes(std::span<const CanonicalSample> trajectory) {
  std::vector<CanonicalSample> out;
  out.reserve(trajectory.size());
  for (const CanonicalSample& s : trajectory) out.push_back(CanonicalSample{s.index, s.transition, {}});
  return out;
}

}  // namespace

std::vector<std::optional<std::int64_t>> record_temporal_attributes(std::span<const CanonicalSample> trajectory,
                                                                    const EventSpec& source,
                                                                    const EventSpec& sink) {
  const std::vector<CanonicalSample> samples = strip_attributes(trajectory);
  const AttributeFn fn = temporal_attribute_fn(source, sink);
  std::vector<std::optional<std::int64_t>> out;
  out.reserve(samples.size());
  AccessLog log;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const AttributeWindow window(std::span<const CanonicalSample>(samples).first(i + 1), std::nullopt, &log);
    out.push_back(fn(samples[i].transition, window).temporal);
  }
  return out;
}

std::vector<EventOccurrence> find_occurrences(std::span<const CanonicalSample> trajectory, const EventSpec& event) {
  std::vector<EventOccurrence> out;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const AttributeWindow window(trajectory.first(i + 1), std::nullopt, nullptr);
    if (event.fires(window)) {
      const Vec& x = trajectory[i].transition.x;
      out.push_back({event.id, static_cast<std::int64_t>(i), event.coordinate ? event.coordinate(x) : 0.0});
    }
  }
  return out;
}

std::optional<std::int64_t> TemporalTracker::on_sink(std::int64_t step) const {
  if (!last_source_ || *last_source_ >= step) return std::nullopt;
  return step - *last_source_;
}

}  // namespace canon
