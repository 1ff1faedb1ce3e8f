#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "moflow/generators.hpp"
#include "moflow/oracle.hpp"
#include "moflow/scalar_mcf.hpp"
#include "test_support.hpp"

using namespace moflow;
using namespace moflow::testing;

namespace {

WeightVector weights(std::vector<Rational> components) {
  return WeightVector{std::move(components)};
}

// Brute-force minimum of lambda . C f over all feasible flows.
Rational oracle_minimum(const Network& network, const WeightVector& lambda) {
  const auto costs = scalar_costs(network, lambda);
  bool first = true;
  Rational best(0);
  for (const Flow& flow : enumerate_all_flows(network)) {
    Rational value(0);
    for (int a = 0; a < network.m(); ++a) {
      if (flow.values[a] != 0) value += costs[a] * make_rational(flow.values[a]);
    }
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  REQUIRE_FALSE(first);
  return best;
}

}  // namespace

TEST_CASE("scalarize fig2 with equal weights on the first two objectives") {
  const Network network = fig2_instance();
  const Network scalar = scalarize(
      network, weights({make_rational(1, 2), make_rational(1, 2), 0}));
  CHECK(scalar.d() == 1);
  CHECK(scalar.arcs[0].cost[0] == make_rational(2));  // (0 + 4) / 2
  CHECK(scalar.arcs[4].cost[0] == make_rational(4));  // (4 + 4) / 2
  CHECK(scalar.balance == network.balance);
  CHECK(scalar.arcs[0].upper == 4);
}

TEST_CASE("scalarize with a unit weight reproduces one objective") {
  const Network network = fig2_instance();
  const Network scalar = scalarize(network, weights({1, 0, 0}));
  for (int a = 0; a < network.m(); ++a) {
    CHECK(scalar.arcs[a].cost[0] == network.arcs[a].cost[0]);
  }
}

TEST_CASE("scalarize scales linearly in the weights") {
  const Network network = fig2_instance();
  const WeightVector lambda = weights({1, make_rational(1, 2), 3});
  const WeightVector triple = weights({3, make_rational(3, 2), 9});
  const Network a = scalarize(network, lambda);
  const Network b = scalarize(network, triple);
  for (int i = 0; i < network.m(); ++i) {
    CHECK(b.arcs[i].cost[0] == a.arcs[i].cost[0] * 3);
  }
}

TEST_CASE("scalarize rejects invalid weight vectors") {
  CHECK_THROWS_AS(scalarize(fig2_instance(), weights({0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(scalarize(fig2_instance(), weights({1, -1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(scalarize(fig2_instance(), weights({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("solve fig2 with the interior weights") {
  const Network network = fig2_instance();
  const WeightVector lambda = weights(
      {make_rational(1, 4), make_rational(1, 2), make_rational(1, 4)});
  const ScalarSolution solution = solve(network, lambda);
  CHECK(solution.objective_value == make_rational(21, 2));
  CHECK(solution.objective_value == oracle_minimum(network, lambda));
  CHECK(certifies(network, lambda, solution));
  CHECK(is_feasible(network, solution.flow));
}

TEST_CASE("solve returns the unique feasible flow whatever the weights") {
  const Network network = pinned_path_instance(2);
  for (const auto& lambda :
       {weights({1, 1}), weights({1, 0}), weights({0, make_rational(2, 7)})}) {
    const ScalarSolution solution = solve(network, lambda);
    CHECK(solution.flow.values == std::vector<std::int64_t>{2, 2});
  }
}

TEST_CASE("solve handles negative costs via saturation") {
  Network network = chooser_instance({{-3}, {1}}, 1);
  network.arcs[0].upper = 2;
  const ScalarSolution solution = solve(network, weights({1}));
  CHECK(solution.flow.values == std::vector<std::int64_t>{1, 0});
  CHECK(solution.objective_value == make_rational(-3));
  CHECK(certifies(network, weights({1}), solution));
}

TEST_CASE("solve reports infeasibility explicitly") {
  Network network = chooser_instance({{1}}, 1);
  network.arcs[0].upper = 0;  // demand 1 cannot be met
  CHECK_THROWS_AS(solve(network, weights({1})), InfeasibleError);
}

TEST_CASE("argmin invariance under weight scaling") {
  const Network network = fig2_instance();
  const WeightVector lambda = weights({1, 2, 1});
  const WeightVector scaled = weights({3, 6, 3});
  const ScalarSolution a = solve(network, lambda);
  const ScalarSolution b = solve(network, scaled);
  // Exchanged certificates: each flow is optimal for the other weights.
  CHECK(verify_optimal(network, scaled, a.flow).optimal);
  CHECK(verify_optimal(network, lambda, b.flow).optimal);
}

TEST_CASE("lexicographic solves of fig2 match the extreme points") {
  const Network network = fig2_instance();
  CHECK(outcome(network, solve_lexicographic(network, {0, 1, 2}).flow) ==
        make_outcome({8, 16, 6}));
  CHECK(outcome(network, solve_lexicographic(network, {1, 0, 2}).flow) ==
        make_outcome({16, 8, 10}));
}

TEST_CASE("single-stage lexicographic equals a unit-weight solve") {
  const Network network = fig2_instance();
  const ScalarSolution lex = solve_lexicographic(network, {0});
  const ScalarSolution direct = solve(network, weights({1, 0, 0}));
  CHECK(lex.objective_value == direct.objective_value);
  CHECK(certifies(network, weights({1, 0, 0}), lex));
}

TEST_CASE("lexicographic certificate covers the first objective") {
  const Network network = fig2_instance();
  const ScalarSolution lex = solve_lexicographic(network, {2, 0, 1});
  CHECK(certifies(network, weights({0, 0, 1}), lex));
}

TEST_CASE("lexicographic order validation") {
  const Network network = fig2_instance();
  CHECK_THROWS_AS(solve_lexicographic(network, {0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_lexicographic(network, {3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_lexicographic(network, {}), std::invalid_argument);
}

TEST_CASE("lexicographic output is efficient") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Network network = random_instance({5, 8, 2, 5, 3, seed});
    const Flow lex = solve_lexicographic(network, {0, 1}).flow;
    const OutcomeVector y = outcome(network, lex);
    for (const Flow& other : enumerate_all_flows(network)) {
      CHECK_FALSE(leq_dominates(outcome(network, other), y));
    }
  }
}

TEST_CASE("verify_optimal confirms solver output") {
  const Network network = fig2_instance();
  const WeightVector lambda = weights({1, 2, 1});
  const ScalarSolution solution = solve(network, lambda);
  const VerifyResult result = verify_optimal(network, lambda, solution.flow);
  CHECK(result.optimal);
  // The returned potentials are themselves a valid certificate.
  CHECK(certifies(network, lambda,
                  ScalarSolution{solution.flow, result.potentials,
                                 solution.objective_value}));
}

TEST_CASE("verify_optimal rejects a dominated flow with a witness cycle") {
  const Network network = fig2_instance();
  // This flow maps to (12,12,10), weighted value 23/2 > 21/2.
  const Flow dominated{{1, 1, 0, 0, 0, 4}};
  REQUIRE(is_feasible(network, dominated));
  REQUIRE(outcome(network, dominated) == make_outcome({12, 12, 10}));
  const WeightVector lambda = weights(
      {make_rational(1, 4), make_rational(1, 2), make_rational(1, 4)});
  const VerifyResult result = verify_optimal(network, lambda, dominated);
  REQUIRE_FALSE(result.optimal);
  REQUIRE_FALSE(result.negative_cycle.empty());

  // The witness cycle must close up, use existing residual arcs, and have
  // negative total cost.
  const auto costs = scalar_costs(network, lambda);
  Rational total(0);
  int node = -1;
  int start = -1;
  for (const ResidualArcRef& ref : result.negative_cycle) {
    const Arc& arc = network.arcs[ref.arc];
    const int tail = ref.forward ? arc.tail : arc.head;
    const int head = ref.forward ? arc.head : arc.tail;
    if (node >= 0) {
      CHECK(tail == node);
    } else {
      start = tail;
    }
    node = head;
    total += ref.forward ? costs[ref.arc] : -costs[ref.arc];
    if (ref.forward) {
      CHECK(dominated.values[ref.arc] < arc.upper);
    } else {
      CHECK(dominated.values[ref.arc] > arc.lower);
    }
  }
  CHECK(node == start);
  CHECK(total < 0);
}

TEST_CASE("verify_optimal accepts any weights on a unique-flow network") {
  const Network network = pinned_path_instance(2);
  const Flow flow{{2, 2}};
  CHECK(verify_optimal(network, weights({1, 0}), flow).optimal);
  CHECK(verify_optimal(network, weights({0, 1}), flow).optimal);
}

TEST_CASE("verify_optimal rejects infeasible flows") {
  CHECK_THROWS_AS(verify_optimal(fig2_instance(), weights({1, 1, 1}),
                                 Flow{{9, 0, 0, 0, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("solve matches the oracle minimum on random instances") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Network network =
        random_instance({4 + static_cast<int>(seed % 3),
                         6 + static_cast<int>(seed % 4), 2, 5, 3, seed});
    WeightVector lambda;
    lambda.components = {make_rational(static_cast<long>(rng() % 4)),
                         make_rational(static_cast<long>(rng() % 4 + 1))};
    const ScalarSolution solution = solve(network, lambda);
    CHECK(solution.objective_value == oracle_minimum(network, lambda));
    CHECK(certifies(network, lambda, solution));
    CHECK(verify_optimal(network, lambda, solution.flow).optimal);
  }
}
