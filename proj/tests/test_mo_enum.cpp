#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "moflow/generators.hpp"
#include "moflow/mo_enum.hpp"
#include "moflow/oracle.hpp"
#include "test_support.hpp"

using namespace moflow;
using namespace moflow::testing;

namespace {

std::set<std::vector<std::int64_t>> supported_flow_set(
    const std::vector<SupportedFlow>& flows) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& record : flows) out.insert(record.flow.values);
  return out;
}

int facet_index(const UpperImage& ui, const std::vector<Rational>& normal) {
  for (int u = 0; u < static_cast<int>(ui.facets.size()); ++u) {
    if (ui.facets[u].normal.components == normal) return u;
  }
  return -1;
}

}  // namespace

TEST_CASE("fig2 upper image has the three extreme vertices") {
  const Network network = fig2_instance();
  const UpperImage ui = compute_upper_image(network);
  REQUIRE(ui.vertices.size() == 3);
  CHECK(ui.vertices[0].y == make_outcome({8, 16, 6}));
  CHECK(ui.vertices[1].y == make_outcome({12, 12, 6}));
  CHECK(ui.vertices[2].y == make_outcome({16, 8, 10}));
  for (const auto& vertex : ui.vertices) {
    CHECK(outcome(network, vertex.flow) == vertex.y);
  }
  CHECK(ui.facets.size() == 5);
}

TEST_CASE("fig2 upper image carries the weakly nondominated facet") {
  const UpperImage ui = compute_upper_image(fig2_instance());
  const int u = facet_index(ui, {1, 1, 0});
  REQUIRE(u >= 0);
  CHECK(ui.facets[u].offset == make_rational(24));
  CHECK(ui.facets[u].incident_vertices == std::vector<int>{0, 1, 2});
  CHECK_FALSE(ui.facets[u].strictly_positive());
  // No facet of this instance has strictly positive weights.
  for (const auto& facet : ui.facets) {
    CHECK_FALSE(facet.strictly_positive());
  }
}

TEST_CASE("unique feasible flow gives one vertex and coordinate facets") {
  const Network network = pinned_path_instance(3);
  const UpperImage ui = compute_upper_image(network);
  REQUIRE(ui.vertices.size() == 1);
  REQUIRE(ui.facets.size() == 3);
  CHECK(ui.facets[0].normal.components == std::vector<Rational>{0, 0, 1});
  CHECK(ui.facets[1].normal.components == std::vector<Rational>{0, 1, 0});
  CHECK(ui.facets[2].normal.components == std::vector<Rational>{1, 0, 0});
}

TEST_CASE("fig2 facet adjacency follows shared vertex ranks") {
  const UpperImage ui = compute_upper_image(fig2_instance());
  const FaceContext context = facet_adjacency(ui);
  const int e3 = facet_index(ui, {0, 0, 1});
  const int e2 = facet_index(ui, {0, 1, 0});
  const int u011 = facet_index(ui, {0, 1, 1});
  const int e1 = facet_index(ui, {1, 0, 0});
  const int u110 = facet_index(ui, {1, 1, 0});

  // The facets through edge (y2, y3) share two vertices: adjacent.
  CHECK(context.adjacent[u110] == std::vector<int>{e3, u011});
  CHECK(context.adjacent[u011] == std::vector<int>{u110});
  CHECK(context.adjacent[e3] == std::vector<int>{u110});
  // Facets sharing at most one vertex are not adjacent in d = 3.
  CHECK(context.adjacent[e1].empty());
  CHECK(context.adjacent[e2].empty());
}

TEST_CASE("d=2 facets are adjacent iff they share an extreme point") {
  const Network network = chooser_instance({{0, 4}, {1, 1}, {4, 0}}, 2);
  const UpperImage ui = compute_upper_image(network);
  const FaceContext context = facet_adjacency(ui);
  const int left = facet_index(ui, {3, 1});
  const int right = facet_index(ui, {1, 3});
  REQUIRE(left >= 0);
  REQUIRE(right >= 0);
  const auto& q = context.adjacent[left];
  CHECK(std::find(q.begin(), q.end(), right) != q.end());
}

TEST_CASE("fig2 supported set excludes the weakly-only outcomes") {
  const Network network = fig2_instance();
  const auto flows = all_supported_flows(network);
  std::vector<OutcomeVector> outcomes;
  for (const auto& record : flows) outcomes.push_back(record.y);
  CHECK(outcome_set(outcomes) ==
        std::set<std::vector<std::string>>{{"8", "16", "6"},
                                           {"12", "12", "6"},
                                           {"16", "8", "10"},
                                           {"13", "11", "7"},
                                           {"14", "10", "8"},
                                           {"15", "9", "9"}});
  CHECK(flows.size() == 6);  // one preimage each, no duplicates
}

TEST_CASE("fig2 witnesses are strictly positive and certify optimality") {
  const Network network = fig2_instance();
  for (const auto& record : all_supported_flows(network)) {
    CHECK(record.witness.strictly_positive());
    CHECK(verify_optimal(network, record.witness, record.flow).optimal);
  }
}

TEST_CASE("star collapses to the uniform-weight fallback") {
  const Network network = star_instance(3, 2);
  const auto flows = all_supported_flows(network);
  CHECK(flows.size() == 10);
  for (const auto& record : flows) {
    CHECK(record.y == make_outcome({6, 6}));
  }
}

TEST_CASE("consider_subfaces on the edge pair emits the edge preimages") {
  const Network network = fig2_instance();
  const UpperImage ui = compute_upper_image(network);
  SupportedFlowEnumerator enumerator(network, ui);
  const int e3 = facet_index(ui, {0, 0, 1});
  std::vector<SupportedFlow> emitted;
  enumerator.consider_subfaces({e3}, {},
                               [&emitted](const SupportedFlow& record) {
                                 emitted.push_back(record);
                                 return true;
                               });
  // Extending {e3} by the (1,1,0) facet turns the combination strictly
  // positive and enumerates the preimages of edge (y1, y2).
  std::vector<OutcomeVector> outcomes;
  for (const auto& record : emitted) {
    outcomes.push_back(record.y);
    CHECK(record.witness.components == std::vector<Rational>{1, 1, 1});
  }
  CHECK(outcome_set(outcomes) == std::set<std::vector<std::string>>{
                                     {"8", "16", "6"}, {"12", "12", "6"}});
}

TEST_CASE("consider_subfaces stops at the stack size guard") {
  const Network network = fig2_instance();
  const UpperImage ui = compute_upper_image(network);
  SupportedFlowEnumerator enumerator(network, ui);
  const int e3 = facet_index(ui, {0, 0, 1});
  const int u011 = facet_index(ui, {0, 1, 1});
  std::size_t emitted = 0;
  // The only candidate extending {e3, u011} is the (1,1,0) facet, but the
  // resulting stack would exceed d - 1 members.
  enumerator.consider_subfaces({e3, u011}, {},
                               [&emitted](const SupportedFlow&) {
                                 ++emitted;
                                 return true;
                               });
  CHECK(emitted == 0);
}

TEST_CASE("closed faces are not explored again") {
  const Network network = fig2_instance();
  const UpperImage ui = compute_upper_image(network);
  SupportedFlowEnumerator enumerator(network, ui);
  const int e3 = facet_index(ui, {0, 0, 1});
  const int u110 = facet_index(ui, {1, 1, 0});
  std::size_t emitted = 0;
  enumerator.consider_subfaces({e3}, {u110},
                               [&emitted](const SupportedFlow&) {
                                 ++emitted;
                                 return true;
                               });
  CHECK(emitted == 0);
}

TEST_CASE("general and biobjective pipelines agree on random d=2 instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Network network = random_instance(
        {3 + static_cast<int>(seed % 4), 5 + static_cast<int>(seed % 6), 2, 5,
         3, seed});
    CHECK(supported_flow_set(all_supported_flows(network)) ==
          supported_flow_set(all_supported_flows_bi(network)));
  }
}

TEST_CASE("supported set matches the oracle on random d=3 instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Network network = random_instance(
        {3 + static_cast<int>(seed % 4), 5 + static_cast<int>(seed % 5), 3, 5,
         3, seed});
    const Classification reference = classify(network);
    const auto expected =
        flow_set(reference.flows_with_label(OutcomeLabel::supported));
    const auto flows = all_supported_flows(network);
    CHECK(flows.size() == expected.size());
    CHECK(supported_flow_set(flows) == expected);
  }
}

TEST_CASE("four-objective instances still match the oracle") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Network network = random_instance({4, 6, 4, 4, 2, seed});
    const Classification reference = classify(network);
    const auto expected =
        flow_set(reference.flows_with_label(OutcomeLabel::supported));
    const auto flows = all_supported_flows(network);
    CHECK(flows.size() == expected.size());
    CHECK(supported_flow_set(flows) == expected);
  }
}

TEST_CASE("oracle outcomes satisfy every upper-image facet") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Network network = random_instance({4, 7, 3, 5, 3, seed});
    const UpperImage ui = compute_upper_image(network);
    for (const Flow& flow : enumerate_all_flows(network)) {
      const OutcomeVector y = outcome(network, flow);
      for (const auto& facet : ui.facets) {
        Rational value(0);
        for (int k = 0; k < network.d(); ++k) {
          value += facet.normal.components[k] * y[k];
        }
        CHECK(value >= facet.offset);
      }
    }
  }
}

TEST_CASE("parallel facet sweeps emit the same flows") {
  // The chooser instance has strictly positive edge facets, so the
  // concurrent phase really runs; fig2 covers the all-weakly case.
  for (const Network& network :
       {fig2_instance(), chooser_instance({{0, 4}, {1, 1}, {4, 0}}, 2),
        random_instance({5, 8, 3, 5, 3, 17})}) {
    std::vector<SupportedFlow> sequential;
    std::vector<SupportedFlow> parallel;
    all_supported_flows(network, [&sequential](const SupportedFlow& record) {
      sequential.push_back(record);
      return true;
    });
    all_supported_flows(
        network,
        [&parallel](const SupportedFlow& record) {
          parallel.push_back(record);
          return true;
        },
        4);
    REQUIRE(sequential.size() == parallel.size());
    for (std::size_t i = 0; i < sequential.size(); ++i) {
      CHECK(sequential[i].flow == parallel[i].flow);
      CHECK(sequential[i].witness.components ==
            parallel[i].witness.components);
    }
  }
}
