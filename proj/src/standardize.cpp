#include "canon/standardize.hpp"

#include <string>
#include <utility>

namespace canon {

Standardizer::Standardizer(AttributeFn attribute_fn, std::optional<std::size_t> horizon)
    : attribute_fn_(std::move(attribute_fn)), horizon_(horizon) {}

const CanonicalSample& Standardizer::push(Transition transition) {
  transition.validate();
  if (!samples_.empty()) {
    const Transition& first = samples_.front().transition;
    if (transition.state_dim() != first.state_dim() || transition.action_dim() != first.action_dim()) {
      throw SchemaError("standardize: step " + std::to_string(samples_.size()) +
                        " has dims (n=" + std::to_string(transition.state_dim()) +
                        ", m=" + std::to_string(transition.action_dim()) + "), expected (n=" +
                        std::to_string(first.state_dim()) + ", m=" + std::to_string(first.action_dim()) + ")");
    }
  }

  CanonicalSample sample;
  sample.index = static_cast<std::int64_t>(samples_.size());
  sample.transition = std::move(transition);
  samples_.push_back(std::move(sample));

  CanonicalSample& current = samples_.back();
  try {
    const AttributeWindow window(samples_, horizon_, &log_);
    AttributeRecord record = attribute_fn_(current.transition, window);
    record.validate();
    current.attribute = std::move(record);
  } catch (...) {
    samples_.pop_back();
    throw;
  }
  return samples_.back();
}

void Standardizer::reset() {
  samples_.clear();
  log_ = AccessLog{};
}

std::vector<CanonicalSample> standardize_trajectory(const RawTrajectory& raw,
                                                    const AttributeFn& attribute_fn,
                                                    std::optional<std::size_t> horizon) {
  if (raw.states.size() < 2) throw SchemaError("standardize: trajectory needs at least 2 states");
  if (raw.actions.size() + 1 != raw.states.size()) {
    throw SchemaError("standardize: " + std::to_string(raw.states.size()) + " states but " +
                      std::to_string(raw.actions.size()) + " actions");
  }
  Standardizer standardizer(attribute_fn, horizon);
  for (std::size_t i = 0; i + 1 < raw.states.size(); ++i) {
    standardizer.push(Transition{raw.states[i], raw.actions[i], raw.states[i + 1]});
  }
  return standardizer.samples();
}

ContractReport check_attribute_contract(const AttributeFn& attribute_fn,
                                        const std::vector<RawTrajectory>& probes,
                                        std::optional<std::size_t> declared_horizon) {
  ContractReport report;
  for (const RawTrajectory& raw : probes) {
    std::vector<CanonicalSample> samples;
    AccessLog log;
    for (std::size_t i = 0; i + 1 < raw.states.size() && i < raw.actions.size(); ++i) {
      CanonicalSample sample;
      sample.index = static_cast<std::int64_t>(i);
      sample.transition = Transition{raw.states[i], raw.actions[i], raw.states[i + 1]};
      samples.push_back(std::move(sample));
      try {
        const AttributeWindow window(samples, std::nullopt, &log);
        samples.back().attribute = attribute_fn(samples.back().transition, window);
      } catch (const CausalityError&) {
        // recorded in the log
      } catch (const LocalityError&) {
        // reading before the trajectory start; also recorded
      }
    }
    if (log.future_access) report.causal = false;
    if (log.out_of_horizon) report.local = false;
    if (log.max_lookback > report.max_lookback) report.max_lookback = log.max_lookback;
  }
  if (declared_horizon && report.max_lookback > *declared_horizon) report.local = false;
  return report;
}

AttributeFn empty_attributes() {
  return [](const Transition&, const AttributeWindow&) { return AttributeRecord{}; };
}

AttributeFn combine_attributes(std::vector<AttributeFn> fns) {
  return [fns = std::move(fns)](const Transition& current, const AttributeWindow& window) {
    AttributeRecord merged;
    for (const auto& fn : fns) merged.merge(fn(current, window));
    return merged;
  };
}

}  // namespace canon
