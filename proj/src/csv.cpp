#include "canon/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "canon/jsonl.hpp"

namespace canon {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::vector<EventPoint> read_event_points(std::istream& in) {
  std::vector<EventPoint> points;
  std::string text;
  std::size_t line = 0;
  bool first = true;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view row = trim(text);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    double c = 0.0;
    double t = 0.0;
    const bool ok = comma != std::string_view::npos && row.find(',', comma + 1) == std::string_view::npos &&
                    parse_number(row.substr(0, comma), c) && parse_number(row.substr(comma + 1), t);
    if (!ok) {
      if (first) {
        first = false;
        continue;  // header
      }
      throw ParseError(line, "expected 'coordinate,time', got '" + std::string(row) + "'");
    }
    first = false;
    points.push_back({c, t});
  }
  return points;
}

void write_breakpoints(std::ostream& out, const EventTimeDistribution& dist) {
  out << "coordinate,time\n";
  for (const EventPoint& p : dist.breakpoints()) out << format_double(p.coordinate) << ',' << format_double(p.time) << '\n';
}

void write_learning_curve(std::ostream& out, const std::vector<EpisodeRecord>& curve) {
  out << "episode,length,shaped_return,base_return\n";
  for (const EpisodeRecord& r : curve) {
    out << r.episode << ',' << r.length << ',' << format_double(r.shaped_return) << ',' << format_double(r.base_return)
        << '\n';
  }
}

void write_bench_header(std::ostream& out) {
  out << "query_id,total,candidates,reject_ratio,time_filtered_ns,time_bruteforce_ns,result_size\n";
}

void write_bench_row(std::ostream& out, const BenchRow& row) {
  out << row.query_id << ',' << row.total << ',' << row.candidates << ',' << format_double(row.reject_ratio) << ','
      << row.time_filtered_ns << ',' << row.time_bruteforce_ns << ',' << row.result_size << '\n';
}

}  // namespace canon
