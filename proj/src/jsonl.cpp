#include "canon/jsonl.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace canon {

using Json = nlohmann::ordered_json;

namespace {

Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (double d : v) arr.push_back(d);
  return arr;
}

Vec vec_from(const Json& j, const char* key, std::size_t line) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(line, std::string("missing field '") + key + "'");
  if (!it->is_array()) throw ParseError(line, std::string("field '") + key + "' must be an array");
  Vec out;
  out.reserve(it->size());
  for (const Json& e : *it) {
    if (!e.is_number()) throw ParseError(line, std::string("field '") + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Json parse_line(const std::string& text, std::size_t line) {
  try {
    Json j = Json::parse(text);
    if (!j.is_object()) throw ParseError(line, "expected a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw ParseError(line, std::string("invalid JSON: ") + e.what());
  }
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

void write_dataset(std::ostream& out, const DatasetView& view) {
  const DatasetMeta& meta = view.meta();
  Json header;
  header["n"] = meta.state_dim;
  header["m"] = meta.action_dim;
  header["beta"] = meta.beta;
  if (view.anchors()) {
    Json anchors = Json::array();
    for (const Vec& a : view.anchors()->points()) anchors.push_back(to_json(a));
    header["anchors"] = std::move(anchors);
  } else {
    header["anchors"] = nullptr;
  }
  header["seed"] = meta.seed;
  out << header.dump() << '\n';

  for (const CanonicalSample& s : view.samples()) {
    Json j;
    j["i"] = s.index;
    j["x"] = to_json(s.transition.x);
    j["u"] = to_json(s.transition.u);
    j["xn"] = to_json(s.transition.x_next);
    Json attr;
    attr["temporal"] = s.attribute.temporal ? Json(*s.attribute.temporal) : Json(nullptr);
    attr["spatial"] = s.attribute.spatial ? to_json(*s.attribute.spatial) : Json(nullptr);
    j["attr"] = std::move(attr);
    out << j.dump() << '\n';
  }
}

void write_dataset(const std::string& path, const DatasetView& view) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_dataset(out, view);
}

CanonicalDataset read_dataset(std::istream& in) {
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!blank(text)) break;
  }
  if (line == 0 || blank(text)) throw ParseError(line, "missing dataset header");

  const Json header = parse_line(text, line);
  DatasetMeta meta;
  std::optional<AnchorSet> anchors;
  try {
    meta.state_dim = header.at("n").get<std::size_t>();
    meta.action_dim = header.at("m").get<std::size_t>();
    meta.beta = header.at("beta").get<double>();
    meta.seed = header.at("seed").get<std::uint64_t>();
    const Json& a = header.at("anchors");
    if (!a.is_null()) {
      std::vector<Vec> points;
      for (const Json& p : a) points.push_back(p.get<Vec>());
      anchors.emplace(std::move(points), meta.beta);
    }
  } catch (const Json::exception& e) {
    throw ParseError(line, std::string("bad header: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, std::string("bad header: ") + e.what());
  }

  std::optional<CanonicalDataset> dataset;
  try {
    dataset.emplace(meta, anchors);
  } catch (const SchemaError& e) {
    throw ParseError(line, e.what());
  }

  while (std::getline(in, text)) {
    ++line;
    if (blank(text)) continue;
    const Json j = parse_line(text, line);
    CanonicalSample s;
    try {
      s.index = j.at("i").get<std::int64_t>();
      const Json& attr = j.at("attr");
      const Json& temporal = attr.at("temporal");
      if (!temporal.is_null()) s.attribute.temporal = temporal.get<std::int64_t>();
      const Json& spatial = attr.at("spatial");
      if (!spatial.is_null()) s.attribute.spatial = vec_from(attr, "spatial", line);
    } catch (const Json::exception& e) {
      throw ParseError(line, e.what());
    }
    s.transition.x = vec_from(j, "x", line);
    s.transition.u = vec_from(j, "u", line);
    s.transition.x_next = vec_from(j, "xn", line);
    try {
      dataset->append(std::move(s));
    } catch (const SchemaError& e) {
      throw ParseError(line, e.what());
    }
  }
  return std::move(*dataset);
}

CanonicalDataset read_dataset(const std::string& path) {
  std::ifstream in = open_in(path);
  return read_dataset(in);
}

void write_raw_trajectory(std::ostream& out, const RawTrajectory& raw) {
  for (std::size_t i = 0; i < raw.states.size(); ++i) {
    Json j;
    j["x"] = to_json(raw.states[i]);
    if (i < raw.actions.size()) j["u"] = to_json(raw.actions[i]);
    out << j.dump() << '\n';
  }
}

RawTrajectory read_raw_trajectory(std::istream& in) {
  RawTrajectory raw;
  std::string text;
  std::size_t line = 0;
  bool ended = false;
  while (std::getline(in, text)) {
    ++line;
    if (blank(text)) continue;
    if (ended) throw ParseError(line, "step after the final state (only the last line may omit 'u')");
    const Json j = parse_line(text, line);
    raw.states.push_back(vec_from(j, "x", line));
    if (j.contains("u")) {
      raw.actions.push_back(vec_from(j, "u", line));
    } else {
      ended = true;
    }
  }
  if (raw.states.empty()) throw ParseError(line, "empty trajectory");
  if (!ended) throw ParseError(line, "trajectory must end with a state-only line");
  return raw;
}

RawTrajectory read_raw_trajectory(const std::string& path) {
  std::ifstream in = open_in(path);
  return read_raw_trajectory(in);
}

}  // namespace canon
