#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace canon {

using Vec = std::vector<double>;

// Error taxonomy. Everything derives from std::runtime_error so callers that
// only care about "something went wrong" can catch one type.

/// Sample or dataset does not conform to the declared dimensions / value domain.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An attribute function tried to read a sample later than the current one.
class CausalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An attribute function tried to read a sample older than its horizon allows.
class LocalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not meet its precondition
/// (e.g. a filtered search on a dataset without spatial attributes).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One observed step of plant dynamics: x' = f(x, u).
struct Transition {
  Vec x;
  Vec u;
  Vec x_next;

  std::size_t state_dim() const { return x.size(); }
  std::size_t action_dim() const { return u.size(); }

  /// Throws SchemaError unless dims are consistent and every entry is finite.
  void validate() const;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Online-computed per-sample characteristics.
struct AttributeRecord {
  /// Elapsed discrete steps between a source and a sink event (>= 1).
  std::optional<std::int64_t> temporal;
  /// Distances to each anchor of the owning dataset (each >= 0).
  std::optional<Vec> spatial;
  std::map<std::string, double> custom;

  bool empty() const { return !temporal && !spatial && custom.empty(); }

  /// Merge `other` into this record; fields already present are kept only if
  /// `other` leaves them unset.
  void merge(const AttributeRecord& other);

  void validate() const;

  friend bool operator==(const AttributeRecord&, const AttributeRecord&) = default;
};

struct CanonicalSample {
  std::int64_t index = 0;  // trajectory-local step index
  Transition transition;
  AttributeRecord attribute;

  friend bool operator==(const CanonicalSample&, const CanonicalSample&) = default;
};

/// A raw trajectory {x_0, u_0, x_1, u_1, ..., x_T}; states.size() == actions.size() + 1.
struct RawTrajectory {
  std::vector<Vec> states;
  std::vector<Vec> actions;
};

}  // namespace canon
