#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "canon/dataset.hpp"
#include "canon/types.hpp"

namespace canon {

/// Malformed input file. line() is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Canonical dataset: one header line
//   {"n":..,"m":..,"beta":..,"anchors":[[..]..]|null,"seed":..}
// followed by one line per sample
//   {"i":..,"x":[..],"u":[..],"xn":[..],"attr":{"temporal":int|null,"spatial":[..]|null}}
// Doubles are written in shortest round-trip form. Custom attributes are
// in-memory only and are not serialized.

void write_dataset(std::ostream& out, const DatasetView& view);
void write_dataset(const std::string& path, const DatasetView& view);

/// Throws ParseError (with line number) on malformed input and SchemaError
/// when a well-formed line violates the header's dimensions.
CanonicalDataset read_dataset(std::istream& in);
CanonicalDataset read_dataset(const std::string& path);

// Raw trajectory: one {"x":[..],"u":[..]} line per step and a final {"x":[..]}.

void write_raw_trajectory(std::ostream& out, const RawTrajectory& raw);
RawTrajectory read_raw_trajectory(std::istream& in);
RawTrajectory read_raw_trajectory(const std::string& path);

}  // namespace canon
