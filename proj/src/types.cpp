#include "canon/types.hpp"

#include <cmath>
#include <string>

namespace canon {

namespace {

bool all_finite(const Vec& v) {
  for (double d : v) {
    if (!std::isfinite(d)) return false;
  }
  return true;
}

}  // namespace

void Transition::validate() const {
  if (x.empty()) throw SchemaError("transition: state dimension must be >= 1");
  if (u.empty()) throw SchemaError("transition: action dimension must be >= 1");
  if (x_next.size() != x.size()) {
    throw SchemaError("transition: x has " + std::to_string(x.size()) + " entries but x_next has " +
                      std::to_string(x_next.size()));
  }
  if (!all_finite(x) || !all_finite(u) || !all_finite(x_next)) {
    throw SchemaError("transition: non-finite entry");
  }
}

void AttributeRecord::merge(const AttributeRecord& other) {
  if (!temporal) temporal = other.temporal;
  if (!spatial) spatial = other.spatial;
  for (const auto& [name, value] : other.custom) custom.try_emplace(name, value);
}

void AttributeRecord::validate() const {
  if (temporal && *temporal < 1) {
    throw SchemaError("attribute: temporal value must be >= 1, got " + std::to_string(*temporal));
  }
  if (spatial) {
    for (double d : *spatial) {
      if (!std::isfinite(d) || d < 0.0) throw SchemaError("attribute: spatial entries must be finite and >= 0");
    }
  }
  for (const auto& [name, value] : custom) {
    if (!std::isfinite(value)) throw SchemaError("attribute: custom value '" + name + "' is not finite");
  }
}

}  // namespace canon
