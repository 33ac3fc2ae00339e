#include <gtest/gtest.h>

#include <random>

#include "canon/dataset.hpp"
#include "canon/mountain_car.hpp"
#include "canon/standardize.hpp"
#include "canon/synthetic.hpp"
#include "canon/temporal.hpp"

using namespace canon;
namespace mc = canon::mountain_car;

namespace {

RawTrajectory random_walk(std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  RawTrajectory raw;
  raw.states.push_back({g(rng), g(rng)});
  for (std::size_t i = 0; i < steps; ++i) {
    raw.actions.push_back({g(rng)});
    raw.states.push_back({raw.states.back()[0] + raw.actions.back()[0], g(rng)});
  }
  return raw;
}

// Counts earlier samples whose first state entry exceeds the current one.
AttributeFn rank_attribute() {
  return [](const Transition& t, const AttributeWindow& w) {
    AttributeRecord r;
    double n = 0;
    for (std::size_t j = 0; j < w.current_index(); ++j) n += w.at(j).transition.x[0] > t.x[0];
    r.custom["rank"] = n;
    return r;
  };
}

}  // namespace

TEST(Standardize, SingleStepIdentity) {
  RawTrajectory raw{{{1.0}, {2.0}}, {{0.5}}};
  const auto out = standardize_trajectory(raw, empty_attributes());
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].index, 0);
  EXPECT_EQ(out[0].transition, (Transition{{1.0}, {0.5}, {2.0}}));
  EXPECT_TRUE(out[0].attribute.empty());
}

TEST(Standardize, PrefixConsistency) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RawTrajectory raw = random_walk(40, seed);
    const auto full = standardize_trajectory(raw, rank_attribute());
    for (std::size_t len = 1; len <= raw.actions.size(); ++len) {
      RawTrajectory prefix;
      prefix.states.assign(raw.states.begin(), raw.states.begin() + static_cast<std::ptrdiff_t>(len) + 1);
      prefix.actions.assign(raw.actions.begin(), raw.actions.begin() + static_cast<std::ptrdiff_t>(len));
      const auto part = standardize_trajectory(prefix, rank_attribute());
      ASSERT_EQ(part.size(), len);
      for (std::size_t i = 0; i < len; ++i) ASSERT_EQ(part[i], full[i]) << "seed " << seed << " len " << len;
    }
  }
}

TEST(Standardize, RejectsBadShapes) {
  EXPECT_THROW(standardize_trajectory(RawTrajectory{{{1.0}}, {}}, empty_attributes()), SchemaError);
  EXPECT_THROW(standardize_trajectory(RawTrajectory{{{1.0}, {2.0}}, {{0.5}, {0.5}}}, empty_attributes()),
               SchemaError);
  EXPECT_THROW(standardize_trajectory(RawTrajectory{{{1.0}, {2.0}, {3.0, 1.0}}, {{0.5}, {0.5}}}, empty_attributes()),
               SchemaError);
  EXPECT_THROW(standardize_trajectory(RawTrajectory{{{1.0}, {NAN}}, {{0.5}}}, empty_attributes()), SchemaError);
}

TEST(Standardize, InvalidRecordRejected) {
  AttributeFn zero_time = [](const Transition&, const AttributeWindow&) {
    AttributeRecord r;
    r.temporal = 0;
    return r;
  };
  Standardizer s(zero_time);
  EXPECT_THROW(s.push(Transition{{0.0}, {0.0}, {0.0}}), SchemaError);
  EXPECT_TRUE(s.samples().empty());
}

TEST(AttributeWindowTest, FutureReadThrowsAndIsLogged) {
  AttributeFn peek = [](const Transition&, const AttributeWindow& w) {
    (void)w.at(w.current_index() + 1);
    return AttributeRecord{};
  };
  Standardizer s(peek);
  EXPECT_THROW(s.push(Transition{{0.0}, {0.0}, {0.0}}), CausalityError);
  EXPECT_TRUE(s.access_log().future_access);
}

TEST(AttributeWindowTest, HorizonEnforced) {
  AttributeFn first = [](const Transition&, const AttributeWindow& w) {
    (void)w.at(0);
    return AttributeRecord{};
  };
  Standardizer s(first, 2);
  for (int i = 0; i < 3; ++i) s.push(Transition{{0.0}, {0.0}, {0.0}});
  EXPECT_THROW(s.push(Transition{{0.0}, {0.0}, {0.0}}), LocalityError);
  EXPECT_TRUE(s.access_log().out_of_horizon);
  EXPECT_EQ(s.samples().size(), 3u);
}

TEST(AttributeWindowTest, RebasedKeepsOrigin) {
  std::vector<CanonicalSample> v(6);
  AccessLog log;
  AttributeWindow w(v, 3, &log);
  EXPECT_EQ(w.earliest(), 2u);
  const AttributeWindow r = w.rebased(3);
  EXPECT_EQ(r.current_index(), 3u);
  EXPECT_THROW((void)r.at(4), CausalityError);
  (void)r.lookback(1);
  EXPECT_EQ(log.max_lookback, 3u);
  EXPECT_THROW((void)r.lookback(2), LocalityError);
}

TEST(Contract, ConstantFunction) {
  AttributeFn constant = [](const Transition&, const AttributeWindow&) {
    AttributeRecord r;
    r.custom["c"] = 1.0;
    return r;
  };
  const ContractReport rep = check_attribute_contract(constant, {random_walk(10, 1)}, 0);
  EXPECT_TRUE(rep.causal);
  EXPECT_TRUE(rep.local);
  EXPECT_EQ(rep.max_lookback, 0u);
}

TEST(Contract, FutureReaderIsNotCausal) {
  AttributeFn peek = [](const Transition&, const AttributeWindow& w) {
    (void)w.at(w.current_index() + 1);
    return AttributeRecord{};
  };
  EXPECT_FALSE(check_attribute_contract(peek, {random_walk(5, 2)}).causal);
}

TEST(Contract, DeclaredHorizonTooShort) {
  const ContractReport rep = check_attribute_contract(rank_attribute(), {random_walk(10, 3)}, 4);
  EXPECT_TRUE(rep.causal);
  EXPECT_FALSE(rep.local);
  EXPECT_EQ(rep.max_lookback, 9u);
}

TEST(Contract, TemporalAttributeOnRollouts) {
  const mc::SimConfig sim;
  const AttributeFn fn = temporal_attribute_fn(mc::start_event(sim), mc::halt_event(sim));
  std::vector<RawTrajectory> probes;
  std::size_t longest = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    probes.push_back(mc::rollout(sim, mc::Policy::kRandom, seed));
    longest = std::max(longest, probes.back().actions.size());
  }
  const ContractReport rep = check_attribute_contract(fn, probes);
  EXPECT_TRUE(rep.causal);
  EXPECT_TRUE(rep.local);
  EXPECT_LE(rep.max_lookback, longest);
}

TEST(Combine, MergesRecords) {
  AttributeFn a = [](const Transition&, const AttributeWindow&) {
    AttributeRecord r;
    r.custom["a"] = 1.0;
    return r;
  };
  AttributeFn b = [](const Transition&, const AttributeWindow&) {
    AttributeRecord r;
    r.temporal = 4;
    return r;
  };
  const auto out = standardize_trajectory(random_walk(2, 0), combine_attributes({a, b}));
  EXPECT_EQ(out[1].attribute.custom.at("a"), 1.0);
  EXPECT_EQ(out[1].attribute.temporal, 4);
}

TEST(Dataset, AppendAndSchema) {
  CanonicalDataset ds(DatasetMeta{2, 1, 1.0, 0});
  EXPECT_EQ(ds.size(), 0u);
  ds.append(CanonicalSample{0, {{1, 2}, {3}, {4, 5}}, {}});
  EXPECT_EQ(ds.size(), 1u);
  EXPECT_THROW(ds.append(CanonicalSample{1, {{1}, {3}, {4}}, {}}), SchemaError);
  EXPECT_THROW(ds.append(CanonicalSample{1, {{1, 2}, {3, 3}, {4, 5}}, {}}), SchemaError);
  AttributeRecord spatial;
  spatial.spatial = Vec{1.0};
  EXPECT_THROW(ds.append(CanonicalSample{1, {{1, 2}, {3}, {4, 5}}, spatial}), SchemaError);
  EXPECT_EQ(ds.size(), 1u);
  EXPECT_THROW(CanonicalDataset(DatasetMeta{0, 1, 1.0, 0}), SchemaError);
  EXPECT_THROW(CanonicalDataset(DatasetMeta{2, 1, 1.0, 0}, make_axis_anchors(2, 2, 1.0)), SchemaError);
  EXPECT_THROW(CanonicalDataset(DatasetMeta{2, 1, 1.0, 0}, make_axis_anchors(2, 1, 0.5)), SchemaError);
}

TEST(Dataset, ViewsAreSnapshots) {
  CanonicalDataset ds(DatasetMeta{1, 1, 1.0, 0});
  ds.append(CanonicalSample{0, {{0}, {0}, {0}}, {}});
  const DatasetView before = ds.view();
  ds.append(CanonicalSample{1, {{1}, {1}, {1}}, {}});
  EXPECT_EQ(before.size(), 1u);
  EXPECT_EQ(before[0].transition.x[0], 0.0);
  EXPECT_EQ(ds.view().size(), 2u);
}

TEST(Dataset, FullScaleAppend) {
  ClusteredConfig cfg;
  cfg.clusters = 50;
  const CanonicalDataset ds = generate_clustered_dataset(cfg);
  EXPECT_EQ(ds.size(), 401'598u);
  EXPECT_TRUE(ds.view().has_spatial_attributes());
}
