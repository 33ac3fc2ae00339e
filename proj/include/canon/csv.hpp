#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "canon/event_time.hpp"
#include "canon/qlearning.hpp"
#include "canon/spatial_index.hpp"

namespace canon {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Reads `coordinate,time` rows. A non-numeric first line is taken as a
/// header. Throws ParseError with the offending line number.
std::vector<EventPoint> read_event_points(std::istream& in);

/// Writes `coordinate,time` header and one row per breakpoint.
void write_breakpoints(std::ostream& out, const EventTimeDistribution& dist);

void write_learning_curve(std::ostream& out, const std::vector<EpisodeRecord>& curve);

struct BenchRow {
  std::size_t query_id = 0;
  std::size_t total = 0;
  std::size_t candidates = 0;
  double reject_ratio = 0.0;
  long long time_filtered_ns = 0;
  long long time_bruteforce_ns = 0;
  std::size_t result_size = 0;
};

void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRow& row);

}  // namespace canon
