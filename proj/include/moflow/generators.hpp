#ifndef MOFLOW_GENERATORS_HPP
#define MOFLOW_GENERATORS_HPP

#include <cstdint>

#include "moflow/network.hpp"

namespace moflow {

//! The bundled 5-node, 6-arc tri-objective example instance.
Network fig2_instance();

//! Star network: source, n parallel transshipment nodes, sink. Every arc
//! has capacity n and all-ones cost in each of the d objectives; the number
//! of feasible (= supported efficient) flows is C(2n-1, n).
Network star_instance(int n, int d);

struct RandomSpec {
  int nodes = 5;
  int arcs = 8;
  int objectives = 2;
  int max_cost = 5;
  int max_capacity = 3;
  std::uint64_t seed = 1;
};

//! Deterministic random instance: a random spanning tree plus extra arcs,
//! with balances induced by a random feasible flow (so the instance is
//! always connected, balanced and feasible).
Network random_instance(const RandomSpec& spec);

}  // namespace moflow

#endif
