#ifndef MOFLOW_SCALAR_MCF_HPP
#define MOFLOW_SCALAR_MCF_HPP

#include <stdexcept>
#include <vector>

#include "moflow/network.hpp"

namespace moflow {

//! Non-negative, nonzero weighting vector for the weighted-sum program.
//! Stored unnormalized; optimality is invariant under positive scaling.
struct WeightVector {
  std::vector<Rational> components;

  int d() const { return static_cast<int>(components.size()); }
  bool valid() const;              // all >= 0 and at least one > 0
  bool strictly_positive() const;  // all > 0
};

WeightVector uniform_weights(int d);

//! Canonical coprime-integer scaling of the weight direction.
WeightVector canonical_weights(const WeightVector& weights);

//! Node potentials certifying optimality: every residual arc of the
//! certified flow has reduced cost c - pi[tail] + pi[head] >= 0.
using Potentials = std::vector<Rational>;

struct ScalarSolution {
  Flow flow;
  Potentials potentials;
  Rational objective_value;
};

struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& message)
      : std::runtime_error(message) {}
};

//! Per-arc weighted cost lambda . c_a.
std::vector<Rational> scalar_costs(const Network& network,
                                   const WeightVector& weights);

//! Single-objective network with cost lambda . c_a; bounds and balances
//! unchanged. Throws std::invalid_argument on an invalid weight vector.
Network scalarize(const Network& network, const WeightVector& weights);

//! Solves min lambda . C f over the feasible flows by successive shortest
//! paths with node potentials, exact rational arithmetic. Deterministic.
//! Throws InfeasibleError when the network has no feasible flow.
ScalarSolution solve(const Network& network, const WeightVector& weights);

//! Lexicographically minimal flow for the given objective order (0-based
//! indices), via staged re-solving restricted to the zero-reduced-cost
//! subnetwork of each previous stage. The returned potentials and objective
//! certify optimality for the first objective in the order.
ScalarSolution solve_lexicographic(const Network& network,
                                   const std::vector<int>& objective_order);

struct ResidualArcRef {
  int arc;
  bool forward;

  friend bool operator==(const ResidualArcRef&,
                         const ResidualArcRef&) = default;
};

struct VerifyResult {
  bool optimal = false;
  Potentials potentials;                      // when optimal
  std::vector<ResidualArcRef> negative_cycle; // counterexample otherwise
};

//! Independent optimality check via the negative-cycle criterion
//! (Bellman-Ford on the residual graph). Throws std::invalid_argument when
//! the flow is infeasible.
VerifyResult verify_optimal(const Network& network,
                            const WeightVector& weights, const Flow& flow);

//! True iff the solution's potentials certify lambda-optimality of its flow
//! (feasible, no residual arc with negative reduced cost, objective match).
bool certifies(const Network& network, const WeightVector& weights,
               const ScalarSolution& solution);

}  // namespace moflow

#endif
