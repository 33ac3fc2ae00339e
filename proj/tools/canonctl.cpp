// canonctl: file-based front end for canonical datasets, spatial search
// benchmarks, event-time fits and MountainCar training runs.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "canon/csv.hpp"
#include "canon/jsonl.hpp"
#include "canon/mountain_car.hpp"
#include "canon/qlearning.hpp"
#include "canon/spatial_index.hpp"
#include "canon/standardize.hpp"
#include "canon/synthetic.hpp"
#include "canon/temporal.hpp"

namespace {

using Json = nlohmann::ordered_json;
namespace mc = canon::mountain_car;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kContract = 3, kMissingAttributes = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What a subcommand did, written next to its primary output.
struct Manifest {
  std::string subcommand;
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  void write(const std::string& primary) const {
    Json j;
    j["tool"] = "canonctl";
    j["version"] = kVersion;
    j["subcommand"] = subcommand;
    j["argv"] = argv;
    j["seed"] = seed;
    j["config"] = config;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    std::ofstream out(primary + ".manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest for '" + primary + "'");
    out << j.dump(2) << '\n';
  }
};

std::uint64_t default_seed() {
  const char* env = std::getenv("CANON_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("CANON_SEED is not an unsigned integer: '") + env + "'");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

canon::Vec parse_list(const std::string& text, const std::string& what) {
  canon::Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed " + what + ": '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("malformed " + what + ": empty");
  return out;
}

Json report_json(const canon::SearchReport& r, bool timing) {
  Json j;
  j["result_indices"] = r.result_indices;
  j["candidates_after_filter"] = r.candidates_after_filter;
  j["total"] = r.total;
  j["reject_ratio"] = r.reject_ratio;
  if (timing) j["wall_time_filtered_ns"] = r.wall_time_filtered.count();
  return j;
}

// ---- canonize -------------------------------------------------------------

struct CanonizeOpts {
  std::string input, output;
  bool temporal = false;
  bool spatial = false;
  double beta = 0.2;
  double start_position = -0.5;
  double goal_position = 0.5;
  double halt_eps = mc::kForce + mc::kGravity;
  std::size_t horizon = 0;
};

int canonize(const CanonizeOpts& o, Manifest& m) {
  const canon::RawTrajectory raw = canon::read_raw_trajectory(o.input);
  if (raw.states.size() < 2) throw canon::ParseError(0, "trajectory needs at least two states");
  const std::size_t n = raw.states.front().size();
  const std::size_t dim_m = raw.actions.front().size();

  std::optional<canon::AnchorSet> anchors;
  std::vector<canon::AttributeFn> fns;
  if (o.temporal) {
    if (n != 2) throw UsageError("--temporal uses the MountainCar events and needs 2-dim states");
    mc::SimConfig sim;
    sim.start_position = o.start_position;
    sim.goal_position = o.goal_position;
    sim.halt_velocity_eps = o.halt_eps;
    sim.validate();
    fns.push_back(canon::temporal_attribute_fn(mc::start_event(sim), mc::halt_event(sim)));
  }
  if (o.spatial) {
    anchors = canon::make_axis_anchors(n, dim_m, o.beta);
    fns.push_back([a = *anchors](const canon::Transition& t, const canon::AttributeWindow&) {
      canon::AttributeRecord r;
      r.spatial = canon::compute_spatial_attribute(canon::feature_embed(t.x, t.u, a.beta()), a);
      return r;
    });
  }
  const std::optional<std::size_t> horizon = o.horizon ? std::optional<std::size_t>(o.horizon) : std::nullopt;
  const auto samples = canon::standardize_trajectory(raw, canon::combine_attributes(fns), horizon);

  canon::CanonicalDataset ds(canon::DatasetMeta{n, dim_m, o.beta, m.seed}, anchors);
  ds.reserve(samples.size());
  for (const auto& s : samples) ds.append(s);
  canon::write_dataset(o.output, ds.view());

  m.config = {{"temporal", o.temporal}, {"spatial", o.spatial},           {"beta", o.beta},
              {"start_position", o.start_position}, {"goal_position", o.goal_position},
              {"halt_eps", o.halt_eps}, {"horizon", o.horizon}};
  m.inputs = {o.input};
  m.outputs = {o.output};
  m.write(o.output);
  std::cout << "canonize: " << samples.size() << " samples -> " << o.output << '\n';
  return kOk;
}

// ---- generators -----------------------------------------------------------

struct GenOpts {
  canon::ClusteredConfig cfg;
  std::string output;
};

int gen_clustered(GenOpts o, Manifest& m) {
  o.cfg.seed = m.seed;
  const canon::CanonicalDataset ds = canon::generate_clustered_dataset(o.cfg);
  canon::write_dataset(o.output, ds.view());
  m.config = {{"n_samples", o.cfg.n_samples}, {"state_dim", o.cfg.state_dim}, {"action_dim", o.cfg.action_dim},
              {"clusters", o.cfg.clusters},   {"spread", o.cfg.spread},       {"state_scale", o.cfg.state_scale},
              {"action_extent", o.cfg.action_extent}, {"beta", o.cfg.beta}};
  m.outputs = {o.output};
  m.write(o.output);
  std::cout << "gen-clustered: " << ds.size() << " samples -> " << o.output << '\n';
  return kOk;
}

struct RolloutOpts {
  std::string policy = "random";
  int max_steps = 1000;
  std::string output;
};

int rollout_mountaincar(const RolloutOpts& o, Manifest& m) {
  static const std::map<std::string, mc::Policy> kPolicies{{"zero", mc::Policy::kZero},
                                                           {"push-right", mc::Policy::kPushRight},
                                                           {"bang-bang", mc::Policy::kBangBang},
                                                           {"random", mc::Policy::kRandom}};
  mc::SimConfig sim;
  sim.max_steps = o.max_steps;
  const canon::RawTrajectory raw = mc::rollout(sim, kPolicies.at(o.policy), m.seed);
  auto out = open_out(o.output);
  canon::write_raw_trajectory(out, raw);
  m.config = {{"policy", o.policy}, {"max_steps", o.max_steps}};
  m.outputs = {o.output};
  m.write(o.output);
  std::cout << "rollout-mountaincar: " << raw.actions.size() << " steps -> " << o.output << '\n';
  return kOk;
}

// ---- bench-spatial ----------------------------------------------------------

struct BenchOpts {
  std::string dataset;
  canon::ClusteredConfig cfg;
  double radius = 0.5;
  std::size_t queries = 1000;
  double audit = -1.0;  // fraction; negative = default
  bool timing = true;
  std::string output;
};

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

int bench_spatial(BenchOpts o, Manifest& m) {
  std::optional<canon::CanonicalDataset> ds;
  if (o.dataset.empty()) {
    o.cfg.seed = m.seed;
    ds.emplace(canon::generate_clustered_dataset(o.cfg));
  } else {
    ds.emplace(canon::read_dataset(o.dataset));
  }
  const canon::DatasetView view = ds->view();
  if (view.empty()) throw canon::PreconditionError("bench-spatial: dataset is empty");
  if (!view.has_spatial_attributes()) throw canon::PreconditionError("bench-spatial: dataset has no spatial attributes");
  const canon::SpatialIndex index(view);

  const double audit = o.audit >= 0.0 ? o.audit : (o.queries <= 1000 ? 1.0 : 0.1);
  std::mt19937_64 rng(m.seed);
  std::uniform_int_distribution<std::size_t> pick(0, view.size() - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  auto out = open_out(o.output);
  canon::write_bench_header(out);
  std::vector<double> ratios;
  long long t_filtered = 0, t_brute = 0;
  std::size_t audited = 0, mismatches = 0;
  for (std::size_t q = 0; q < o.queries; ++q) {
    const std::size_t i = pick(rng);
    const bool check = coin(rng) < audit;
    const canon::FeatureVector center{canon::Vec(index.feature(i).begin(), index.feature(i).end())};
    const canon::RNeighborQuery query(center, o.radius);

    const canon::SearchReport rep = index.filtered(query);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> truth = index.bruteforce(query);
    const long long brute_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    if (check) {
      ++audited;
      mismatches += rep.result_indices != truth;
    }

    canon::BenchRow row;
    row.query_id = q;
    row.total = rep.total;
    row.candidates = rep.candidates_after_filter;
    row.reject_ratio = rep.reject_ratio;
    row.time_filtered_ns = o.timing ? rep.wall_time_filtered.count() : 0;
    row.time_bruteforce_ns = o.timing ? brute_ns : 0;
    row.result_size = rep.result_indices.size();
    canon::write_bench_row(out, row);
    ratios.push_back(rep.reject_ratio);
    t_filtered += rep.wall_time_filtered.count();
    t_brute += brute_ns;
  }

  const auto above = static_cast<std::size_t>(std::count_if(ratios.begin(), ratios.end(), [](double r) { return r > 0.99; }));
  std::cout << "bench-spatial: queries=" << o.queries << " total=" << view.size()
            << " median_reject_ratio=" << canon::format_double(median(ratios)) << " above_0.99=" << above;
  if (o.timing && t_filtered > 0) {
    std::cout << " speedup=" << canon::format_double(static_cast<double>(t_brute) / static_cast<double>(t_filtered));
  }
  std::cout << " audited=" << audited << " mismatches=" << mismatches << '\n';

  m.config = {{"radius", o.radius}, {"queries", o.queries}, {"audit_fraction", audit}, {"timing", o.timing}};
  if (o.dataset.empty()) {
    m.config["generator"] = {{"n_samples", o.cfg.n_samples}, {"clusters", o.cfg.clusters},
                             {"spread", o.cfg.spread},       {"state_scale", o.cfg.state_scale},
                             {"beta", o.cfg.beta}};
  } else {
    m.inputs = {o.dataset};
  }
  m.outputs = {o.output};
  m.write(o.output);
  return mismatches ? kFailure : kOk;
}

// ---- fit-ettd ---------------------------------------------------------------

struct FitOpts {
  std::string input, output;
};

int fit_ettd(const FitOpts& o, Manifest& m) {
  std::ifstream in(o.input);
  if (!in) throw canon::ParseError(0, "cannot open '" + o.input + "'");
  const std::vector<canon::EventPoint> points = canon::read_event_points(in);
  if (points.empty()) throw canon::ParseError(0, "'" + o.input + "' holds no event samples");
  const canon::EventTimeDistribution dist = canon::fit_event_time_distribution(points);
  auto out = open_out(o.output);
  canon::write_breakpoints(out, dist);
  m.inputs = {o.input};
  m.outputs = {o.output};
  m.write(o.output);
  std::cout << "fit-ettd: " << points.size() << " samples, " << dist.breakpoints().size() << " breakpoints -> "
            << o.output << '\n';
  return kOk;
}

// ---- train-mountaincar --------------------------------------------------------

struct TrainOpts {
  std::string shaping = "off";
  canon::TrainConfig cfg;
  int max_steps = 1000;
  std::string output;
  std::string breakpoints;
};

int train_mountaincar(TrainOpts o, Manifest& m) {
  o.cfg.shaping = o.shaping == "on" ? canon::Shaping::kTemporal : canon::Shaping::kOff;
  o.cfg.seed = m.seed;
  mc::SimConfig sim;
  sim.max_steps = o.max_steps;
  const canon::TrainResult r = canon::train(o.cfg, sim);

  auto out = open_out(o.output);
  canon::write_learning_curve(out, r.curve);
  m.outputs = {o.output};
  if (!o.breakpoints.empty()) {
    auto bp = open_out(o.breakpoints);
    if (!r.distribution.empty()) {
      canon::write_breakpoints(bp, r.distribution);
    } else {
      bp << "coordinate,time\n";
    }
    m.outputs.push_back(o.breakpoints);
  }
  m.config = {{"shaping", o.shaping},     {"episodes", o.cfg.episodes}, {"kappa", o.cfg.kappa},
              {"gamma", o.cfg.gamma},     {"alpha", o.cfg.alpha},       {"epsilon_start", o.cfg.epsilon_start},
              {"epsilon_end", o.cfg.epsilon_end}, {"epsilon_decay_fraction", o.cfg.epsilon_decay_fraction},
              {"bins", o.cfg.position_bins}, {"max_steps", o.max_steps}};
  m.write(o.output);
  std::cout << "train-mountaincar: " << r.curve.size() << " episodes -> " << o.output << '\n';
  return kOk;
}

// ---- query --------------------------------------------------------------------

struct QueryOpts {
  std::string dataset;
  std::string feature, x, u;
  double radius = 0.5;
  bool timing = false;
  std::string output;
};

int query(const QueryOpts& o, Manifest& m) {
  const canon::CanonicalDataset ds = canon::read_dataset(o.dataset);
  const canon::DatasetView view = ds.view();
  const std::size_t dim = view.meta().state_dim + view.meta().action_dim;

  canon::FeatureVector center;
  if (!o.feature.empty()) {
    if (!o.x.empty() || !o.u.empty()) throw UsageError("give either --feature or --x/--u, not both");
    center.values = parse_list(o.feature, "--feature");
  } else {
    if (o.x.empty() || o.u.empty()) throw UsageError("a center needs --feature or both --x and --u");
    const canon::Vec x = parse_list(o.x, "--x"), u = parse_list(o.u, "--u");
    if (x.size() != view.meta().state_dim || u.size() != view.meta().action_dim) {
      throw UsageError("center has (n=" + std::to_string(x.size()) + ", m=" + std::to_string(u.size()) +
                       "), dataset has (n=" + std::to_string(view.meta().state_dim) +
                       ", m=" + std::to_string(view.meta().action_dim) + ")");
    }
    center = canon::feature_embed(x, u, view.meta().beta);
  }
  if (center.size() != dim) {
    throw UsageError("center has " + std::to_string(center.size()) + " entries, features have " + std::to_string(dim));
  }
  if (!view.has_spatial_attributes()) throw canon::PreconditionError("query: dataset has no spatial attributes");

  const canon::SearchReport rep = canon::SpatialIndex(view).filtered(canon::RNeighborQuery(center, o.radius));
  const std::string text = report_json(rep, o.timing).dump();
  std::cout << text << '\n';
  if (!o.output.empty()) {
    auto out = open_out(o.output);
    out << text << '\n';
    m.config = {{"radius", o.radius}, {"center", center.values}};
    m.inputs = {o.dataset};
    m.outputs = {o.output};
    m.write(o.output);
  }
  return kOk;
}

// ---- driver ---------------------------------------------------------------------

int dispatch(std::vector<std::string> args);

int rerun(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw canon::ParseError(0, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
    return dispatch(j.at("argv").get<std::vector<std::string>>());
  } catch (const Json::exception& e) {
    throw canon::ParseError(0, "bad manifest '" + path + "': " + e.what());
  }
}

int dispatch(std::vector<std::string> args) {
  CLI::App app{"canonical data form toolkit", "canonctl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::optional<std::uint64_t> seed;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (default: $CANON_SEED or 0)");
  };

  CanonizeOpts co;
  auto* c = app.add_subcommand("canonize", "raw trajectory JSONL -> canonical dataset JSONL");
  c->add_option("--input,-i", co.input, "raw trajectory")->required();
  c->add_option("--output,-o", co.output, "canonical dataset")->required();
  c->add_flag("--temporal", co.temporal, "start/halt temporal attribute (MountainCar events)");
  c->add_flag("--spatial", co.spatial, "axis-anchor spatial attribute");
  c->add_option("--beta", co.beta, "state weight in the feature embedding")->check(CLI::PositiveNumber);
  c->add_option("--start-position", co.start_position);
  c->add_option("--goal-position", co.goal_position);
  c->add_option("--halt-eps", co.halt_eps, "velocity band for the halt event")->check(CLI::NonNegativeNumber);
  c->add_option("--horizon", co.horizon, "locality horizon in steps (0 = whole trajectory)");
  add_seed(c);

  GenOpts go;
  auto* g = app.add_subcommand("gen-clustered", "synthetic clustered dataset with spatial attributes");
  g->add_option("--output,-o", go.output)->required();
  g->add_option("--n-samples", go.cfg.n_samples)->check(CLI::PositiveNumber);
  g->add_option("--state-dim", go.cfg.state_dim)->check(CLI::PositiveNumber);
  g->add_option("--action-dim", go.cfg.action_dim)->check(CLI::PositiveNumber);
  g->add_option("--clusters", go.cfg.clusters)->check(CLI::PositiveNumber);
  g->add_option("--spread", go.cfg.spread)->check(CLI::NonNegativeNumber);
  g->add_option("--state-scale", go.cfg.state_scale)->check(CLI::NonNegativeNumber);
  g->add_option("--action-extent", go.cfg.action_extent)->check(CLI::NonNegativeNumber);
  g->add_option("--beta", go.cfg.beta)->check(CLI::PositiveNumber);
  add_seed(g);

  RolloutOpts ro;
  auto* r = app.add_subcommand("rollout-mountaincar", "raw MountainCar trajectory JSONL");
  r->add_option("--output,-o", ro.output)->required();
  r->add_option("--policy", ro.policy)->check(CLI::IsMember({"zero", "push-right", "bang-bang", "random"}));
  r->add_option("--max-steps", ro.max_steps)->check(CLI::PositiveNumber);
  add_seed(r);

  BenchOpts bo;
  auto* b = app.add_subcommand("bench-spatial", "filtered vs brute-force R-neighbor search");
  b->add_option("--dataset,-d", bo.dataset, "canonical dataset (default: generate one)");
  b->add_option("--output,-o", bo.output, "per-query CSV")->required();
  b->add_option("--radius,-R", bo.radius)->check(CLI::PositiveNumber);
  b->add_option("--queries,-q", bo.queries);
  b->add_option("--audit", bo.audit, "fraction of queries checked against brute force")
      ->check(CLI::Range(0.0, 1.0));
  std::string timing = "on";
  b->add_option("--timing", timing, "write wall times (off = zeros, for reproducible files)")
      ->check(CLI::IsMember({"on", "off"}));
  b->add_option("--n-samples", bo.cfg.n_samples)->check(CLI::PositiveNumber);
  b->add_option("--clusters", bo.cfg.clusters)->check(CLI::PositiveNumber);
  b->add_option("--spread", bo.cfg.spread)->check(CLI::NonNegativeNumber);
  b->add_option("--state-scale", bo.cfg.state_scale)->check(CLI::NonNegativeNumber);
  b->add_option("--beta", bo.cfg.beta)->check(CLI::PositiveNumber);
  add_seed(b);

  FitOpts fo;
  auto* f = app.add_subcommand("fit-ettd", "event samples CSV -> event-time distribution breakpoints CSV");
  f->add_option("--input,-i", fo.input)->required();
  f->add_option("--output,-o", fo.output)->required();

  TrainOpts to;
  auto* t = app.add_subcommand("train-mountaincar", "tabular Q-learning with optional temporal shaping");
  t->add_option("--output,-o", to.output, "learning curve CSV")->required();
  t->add_option("--shaping", to.shaping)->check(CLI::IsMember({"on", "off"}));
  t->add_option("--episodes", to.cfg.episodes)->check(CLI::NonNegativeNumber);
  t->add_option("--kappa", to.cfg.kappa)->check(CLI::NonNegativeNumber);
  t->add_option("--gamma", to.cfg.gamma);
  t->add_option("--alpha", to.cfg.alpha);
  t->add_option("--max-steps", to.max_steps)->check(CLI::PositiveNumber);
  t->add_option("--breakpoints", to.breakpoints, "also write the learned event-time distribution");
  add_seed(t);

  QueryOpts qo;
  auto* q = app.add_subcommand("query", "R-neighbor search on a canonical dataset");
  q->add_option("--dataset,-d", qo.dataset)->required();
  q->add_option("--feature", qo.feature, "center feature, comma separated");
  q->add_option("--x", qo.x, "center state, comma separated");
  q->add_option("--u", qo.u, "center action, comma separated");
  q->add_option("--radius,-R", qo.radius)->check(CLI::PositiveNumber);
  q->add_flag("--timing", qo.timing, "include wall time in the report");
  q->add_option("--output,-o", qo.output, "also write the report here");

  std::string manifest_path;
  auto* rr = app.add_subcommand("rerun", "repeat the run recorded in a manifest");
  rr->add_option("manifest", manifest_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Manifest m;
  m.argv = args;
  auto* sub = app.get_subcommands().front();
  m.subcommand = sub->get_name();
  if (m.subcommand == "rerun") return rerun(manifest_path);
  m.seed = seed ? *seed : default_seed();
  if (!seed && sub->get_option_no_throw("--seed")) {
    // pin the resolved seed so a rerun does not depend on the environment
    m.argv.push_back("--seed");
    m.argv.push_back(std::to_string(m.seed));
  }

  if (m.subcommand == "canonize") return canonize(co, m);
  if (m.subcommand == "gen-clustered") return gen_clustered(go, m);
  if (m.subcommand == "rollout-mountaincar") return rollout_mountaincar(ro, m);
  if (m.subcommand == "bench-spatial") {
    bo.timing = timing == "on";
    return bench_spatial(bo, m);
  }
  if (m.subcommand == "fit-ettd") return fit_ettd(fo, m);
  if (m.subcommand == "train-mountaincar") return train_mountaincar(to, m);
  return query(qo, m);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const canon::ParseError& e) {
    std::cerr << "canonctl: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "canonctl: " << e.what() << '\n';
    return kUsage;
  } catch (const canon::SchemaError& e) {
    std::cerr << "canonctl: schema error: " << e.what() << '\n';
    return kUsage;
  } catch (const canon::CausalityError& e) {
    std::cerr << "canonctl: causality violation: " << e.what() << '\n';
    return kContract;
  } catch (const canon::LocalityError& e) {
    std::cerr << "canonctl: locality violation: " << e.what() << '\n';
    return kContract;
  } catch (const canon::PreconditionError& e) {
    std::cerr << "canonctl: " << e.what() << '\n';
    return kMissingAttributes;
  } catch (const std::invalid_argument& e) {
    std::cerr << "canonctl: invalid value: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "canonctl: " << e.what() << '\n';
    return kFailure;
  }
}
