#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "moflow/generators.hpp"
#include "moflow/hull.hpp"
#include "moflow/oracle.hpp"
#include "test_support.hpp"

using namespace moflow;
using namespace moflow::testing;

namespace {

// Independent cross-check of the enumerator: the plain product of all arc
// value ranges, filtered by the balance constraints.
std::set<std::vector<std::int64_t>> product_enumeration(const Network& net) {
  std::set<std::vector<std::int64_t>> flows;
  std::vector<std::int64_t> values(net.m());
  const std::function<void(int)> walk = [&](int a) {
    if (a == net.m()) {
      if (is_feasible(net, Flow{values})) flows.insert(values);
      return;
    }
    for (std::int64_t v = net.arcs[a].lower; v <= net.arcs[a].upper; ++v) {
      values[a] = v;
      walk(a + 1);
    }
  };
  walk(0);
  return flows;
}

}  // namespace

TEST_CASE("star n=2 has exactly the three split flows") {
  const auto flows = enumerate_all_flows(star_instance(2, 2));
  CHECK(flow_set(flows) ==
        std::set<std::vector<std::int64_t>>{
            {0, 0, 2, 2}, {1, 1, 1, 1}, {2, 2, 0, 0}});
}

TEST_CASE("pinned bounds admit exactly one flow") {
  const auto flows = enumerate_all_flows(pinned_path_instance(1));
  REQUIRE(flows.size() == 1);
  CHECK(flows[0].values == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("fig2 has ten flows mapping to ten distinct outcomes") {
  const Network network = fig2_instance();
  const auto flows = enumerate_all_flows(network);
  CHECK(flows.size() == 10);
  std::set<std::vector<std::string>> outcomes;
  for (const Flow& flow : flows) {
    std::vector<std::string> text;
    for (const auto& v : outcome(network, flow)) {
      text.push_back(rational_to_string(v));
    }
    outcomes.insert(text);
  }
  CHECK(outcomes.size() == 10);
}

TEST_CASE("enumeration agrees with plain product enumeration") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Network network = random_instance({4, 6, 2, 3, 2, seed});
    CHECK(flow_set(enumerate_all_flows(network)) ==
          product_enumeration(network));
  }
}

TEST_CASE("enumeration respects the cap") {
  CHECK_THROWS_AS(enumerate_all_flows(fig2_instance(), 5), CapExceededError);
  CHECK_NOTHROW(enumerate_all_flows(fig2_instance(), 10));
}

TEST_CASE("fig2 classification matches the known partition") {
  const Classification c = classify(fig2_instance());
  CHECK(c.flows.size() == 10);

  const auto supported = outcome_set(c.outcomes_with_label(OutcomeLabel::supported));
  const auto weakly =
      outcome_set(c.outcomes_with_label(OutcomeLabel::weakly_supported_only));
  const auto unsupported =
      outcome_set(c.outcomes_with_label(OutcomeLabel::unsupported));
  const auto dominated = outcome_set(c.outcomes_with_label(OutcomeLabel::dominated));

  CHECK(supported == std::set<std::vector<std::string>>{{"8", "16", "6"},
                                                        {"12", "12", "6"},
                                                        {"16", "8", "10"},
                                                        {"13", "11", "7"},
                                                        {"14", "10", "8"},
                                                        {"15", "9", "9"}});
  CHECK(weakly == std::set<std::vector<std::string>>{
                      {"9", "15", "7"}, {"10", "14", "8"}, {"11", "13", "9"}});
  CHECK(unsupported.empty());
  CHECK(dominated == std::set<std::vector<std::string>>{{"12", "12", "10"}});

  const OutcomeClass* d1 = c.find(make_outcome({12, 12, 10}));
  REQUIRE(d1 != nullptr);
  REQUIRE(d1->dominated_by.has_value());
  CHECK(*d1->dominated_by == make_outcome({12, 12, 6}));
}

TEST_CASE("classification witnesses certify their labels") {
  const Network network = fig2_instance();
  const Classification c = classify(network);
  for (const auto& entry : c.outcomes) {
    if (entry.label == OutcomeLabel::supported) {
      REQUIRE(entry.witness.has_value());
      CHECK(entry.witness->strictly_positive());
    }
    if (entry.label == OutcomeLabel::weakly_supported_only) {
      REQUIRE(entry.witness.has_value());
      CHECK(entry.witness->valid());
      CHECK_FALSE(entry.witness->strictly_positive());
    }
    if (entry.witness.has_value()) {
      // The witness weights make this outcome a minimizer over all flows.
      Rational best = entry.witness->components[0] * entry.y[0];
      for (int k = 1; k < network.d(); ++k) {
        best += entry.witness->components[k] * entry.y[k];
      }
      for (const Flow& flow : c.flows) {
        const OutcomeVector other = outcome(network, flow);
        Rational value(0);
        for (int k = 0; k < network.d(); ++k) {
          value += entry.witness->components[k] * other[k];
        }
        CHECK(value >= best);
      }
    }
  }
}

TEST_CASE("single-outcome instances are supported with a uniform witness") {
  const Classification c = classify(pinned_path_instance(3));
  REQUIRE(c.outcomes.size() == 1);
  CHECK(c.outcomes[0].label == OutcomeLabel::supported);
  REQUIRE(c.outcomes[0].witness.has_value());
  CHECK(c.outcomes[0].witness->strictly_positive());
}

TEST_CASE("biobjective instances have no weakly-supported-only outcomes") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Network network = random_instance(
        {3 + static_cast<int>(seed % 4), 6 + static_cast<int>(seed % 5), 2, 5,
         3, seed});
    const Classification c = classify(network);
    CHECK(c.outcomes_with_label(OutcomeLabel::weakly_supported_only).empty());
  }
}

TEST_CASE("labels are invariant under positive integer cost scaling") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Network network = random_instance({4, 7, 3, 4, 2, seed});
    Network scaled = network;
    for (Arc& arc : scaled.arcs) {
      for (Rational& c : arc.cost) c *= 7;
    }
    const Classification a = classify(network);
    const Classification b = classify(scaled);
    REQUIRE(a.outcomes.size() == b.outcomes.size());
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
      CHECK(a.outcomes[i].label == b.outcomes[i].label);
    }
  }
}

TEST_CASE("every flow gets exactly one label, consistent per outcome") {
  const Network network = fig2_instance();
  const Classification c = classify(network);
  std::set<int> seen;
  for (const auto& entry : c.outcomes) {
    for (int id : entry.flow_ids) {
      CHECK_FALSE(seen.count(id));
      seen.insert(id);
      CHECK(outcome(network, c.flows[id]) == entry.y);
    }
  }
  CHECK(seen.size() == c.flows.size());
}

TEST_CASE("crafted chooser instances hit every label") {
  // (2,3) is nondominated but above the segment (0,4)-(3,0): unsupported.
  const Classification flat =
      classify(chooser_instance({{0, 4}, {2, 3}, {3, 0}}, 2));
  const OutcomeClass* u2 = flat.find(make_outcome({2, 3}));
  REQUIRE(u2 != nullptr);
  CHECK(u2->label == OutcomeLabel::unsupported);

  // Lifting with a constant third objective turns it weakly supported:
  // (0,0,1) weights make every flow optimal.
  const Classification lifted =
      classify(chooser_instance({{0, 4, 1}, {2, 3, 1}, {3, 0, 1}}, 3));
  const OutcomeClass* w3 = lifted.find(make_outcome({2, 3, 1}));
  REQUIRE(w3 != nullptr);
  CHECK(w3->label == OutcomeLabel::weakly_supported_only);

  // With a strictly worse third component it has no nonnegative witness at
  // all: unsupported again.
  const Classification bumped =
      classify(chooser_instance({{0, 4, 1}, {2, 3, 2}, {3, 0, 1}}, 3));
  const OutcomeClass* u3 = bumped.find(make_outcome({2, 3, 2}));
  REQUIRE(u3 != nullptr);
  CHECK(u3->label == OutcomeLabel::unsupported);
}

TEST_CASE("boundary geometry separates the labels") {
  // Weakly supported outcomes lie on the upper image boundary, unsupported
  // outcomes strictly inside every facet.
  int unsupported_seen = 0;
  std::vector<Network> networks = {
      chooser_instance({{0, 4}, {2, 3}, {3, 0}}, 2),
      chooser_instance({{0, 4, 1}, {2, 3, 2}, {3, 0, 1}}, 3)};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    networks.push_back(random_instance(
        {4 + static_cast<int>(seed % 3), 7 + static_cast<int>(seed % 3), 3, 5,
         3, seed}));
  }
  for (const Network& network : networks) {
    const Classification c = classify(network);
    std::vector<OutcomeVector> all;
    for (const auto& entry : c.outcomes) all.push_back(entry.y);
    const OrthantHull hull = orthant_hull(all, network.d());
    for (const auto& entry : c.outcomes) {
      CHECK(hull_contains(hull, entry.y));
      bool on_boundary = false;
      for (const auto& facet : hull.facets) {
        Rational value(0);
        for (int k = 0; k < network.d(); ++k) {
          value += facet.normal[k] * entry.y[k];
        }
        if (value == facet.offset) on_boundary = true;
      }
      if (entry.label == OutcomeLabel::unsupported) {
        ++unsupported_seen;
        CHECK_FALSE(on_boundary);
      }
      if (entry.label == OutcomeLabel::supported ||
          entry.label == OutcomeLabel::weakly_supported_only) {
        CHECK(on_boundary);
      }
    }
  }
  // The sweep must actually exercise the unsupported branch.
  CHECK(unsupported_seen > 0);
}
