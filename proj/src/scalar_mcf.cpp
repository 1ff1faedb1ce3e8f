#include "moflow/scalar_mcf.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace moflow {

bool WeightVector::valid() const {
  if (components.empty()) return false;
  bool positive = false;
  for (const auto& w : components) {
    if (w < 0) return false;
    if (w > 0) positive = true;
  }
  return positive;
}

bool WeightVector::strictly_positive() const {
  if (components.empty()) return false;
  return std::all_of(components.begin(), components.end(),
                     [](const Rational& w) { return w > 0; });
}

WeightVector uniform_weights(int d) {
  return WeightVector{std::vector<Rational>(d, Rational(1))};
}

WeightVector canonical_weights(const WeightVector& weights) {
  return WeightVector{scale_to_coprime_integers(weights.components)};
}

std::vector<Rational> scalar_costs(const Network& network,
                                   const WeightVector& weights) {
  if (weights.d() != network.d()) {
    throw std::invalid_argument("weight dimension does not match objectives");
  }
  if (!weights.valid()) {
    throw std::invalid_argument("weights must be >= 0 and not all zero");
  }
  std::vector<Rational> costs(network.m(), Rational(0));
  for (int a = 0; a < network.m(); ++a) {
    for (int k = 0; k < network.d(); ++k) {
      if (weights.components[k] != 0) {
        costs[a] += weights.components[k] * network.arcs[a].cost[k];
      }
    }
  }
  return costs;
}

Network scalarize(const Network& network, const WeightVector& weights) {
  const auto costs = scalar_costs(network, weights);
  Network scalar = network;
  scalar.objective_count = 1;
  for (int a = 0; a < network.m(); ++a) {
    scalar.arcs[a].cost = {costs[a]};
  }
  return scalar;
}

namespace {

// Residual arcs of a flow against explicit per-arc bounds: forward where
// f < upper, backward where f > lower.
struct ResidualView {
  const Network& network;
  const std::vector<Rational>& costs;
  const std::vector<std::int64_t>& flow;
  const std::vector<std::int64_t>& lower;
  const std::vector<std::int64_t>& upper;

  template <typename Fn>
  void for_each_arc(Fn&& fn) const {
    for (int a = 0; a < network.m(); ++a) {
      const Arc& arc = network.arcs[a];
      if (flow[a] < upper[a]) {
        fn(ResidualArcRef{a, true}, arc.tail, arc.head, costs[a],
           upper[a] - flow[a]);
      }
      if (flow[a] > lower[a]) {
        fn(ResidualArcRef{a, false}, arc.head, arc.tail, -costs[a],
           flow[a] - lower[a]);
      }
    }
  }
};

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> full_bounds(
    const Network& network) {
  std::vector<std::int64_t> lower(network.m()), upper(network.m());
  for (int a = 0; a < network.m(); ++a) {
    lower[a] = network.arcs[a].lower;
    upper[a] = network.arcs[a].upper;
  }
  return {lower, upper};
}

// Successive-shortest-path solver over explicit bounds/costs. Invariant:
// every residual arc has nonnegative reduced cost under the potentials.
struct SspSolver {
  const Network& network;
  std::vector<Rational> costs;
  std::vector<std::int64_t> lower, upper;

  std::vector<std::int64_t> flow;
  std::vector<Rational> potentials;
  std::vector<std::int64_t> excess;  // balance minus current net outflow

  SspSolver(const Network& net, std::vector<Rational> arc_costs,
            std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
      : network(net),
        costs(std::move(arc_costs)),
        lower(std::move(lo)),
        upper(std::move(hi)),
        flow(net.m(), 0),
        potentials(net.n(), Rational(0)),
        excess(net.n(), 0) {}

  void run() {
    // Start from bound values: negative-cost arcs saturated, others at the
    // lower bound, so pi = 0 is a valid potential.
    for (int a = 0; a < network.m(); ++a) {
      if (lower[a] > upper[a]) throw InfeasibleError("empty arc bound range");
      flow[a] = costs[a] < 0 ? upper[a] : lower[a];
    }
    for (int i = 0; i < network.n(); ++i) excess[i] = network.balance[i];
    for (int a = 0; a < network.m(); ++a) {
      excess[network.arcs[a].tail] -= flow[a];
      excess[network.arcs[a].head] += flow[a];
    }
    while (true) {
      int source = -1;
      for (int i = 0; i < network.n(); ++i) {
        if (excess[i] > 0) {
          source = i;
          break;
        }
      }
      if (source < 0) {
        for (int i = 0; i < network.n(); ++i) {
          if (excess[i] != 0) {
            throw InfeasibleError("no feasible flow (unbalanced remainder)");
          }
        }
        return;
      }
      augment(source);
    }
  }

  void augment(int source) {
    const int n = network.n();
    std::vector<std::optional<Rational>> dist(n);
    std::vector<ResidualArcRef> reached_by(n, ResidualArcRef{-1, true});
    std::vector<int> parent(n, -1);
    std::vector<char> settled(n, 0);
    dist[source] = Rational(0);

    // Dijkstra with linear extraction; exact rational reduced costs.
    const ResidualView view{network, costs, flow, lower, upper};
    while (true) {
      int best = -1;
      for (int i = 0; i < n; ++i) {
        if (settled[i] || !dist[i]) continue;
        if (best < 0 || *dist[i] < *dist[best]) best = i;
      }
      if (best < 0) break;
      settled[best] = 1;
      view.for_each_arc([&](ResidualArcRef ref, int tail, int head,
                            const Rational& cost, std::int64_t) {
        if (tail != best || settled[head]) return;
        Rational candidate =
            *dist[tail] + cost - potentials[tail] + potentials[head];
        assert(candidate >= *dist[tail]);
        if (!dist[head] || candidate < *dist[head]) {
          dist[head] = candidate;
          reached_by[head] = ref;
          parent[head] = tail;
        }
      });
    }

    int target = -1;
    for (int i = 0; i < n; ++i) {
      if (excess[i] < 0 && dist[i] &&
          (target < 0 || *dist[i] < *dist[target])) {
        target = i;
      }
    }
    if (target < 0) {
      throw InfeasibleError("no feasible flow (deficit unreachable)");
    }

    const Rational limit = *dist[target];
    for (int i = 0; i < n; ++i) {
      potentials[i] -= dist[i] ? std::min(*dist[i], limit) : limit;
    }

    std::int64_t delta = std::min(excess[source], -excess[target]);
    for (int v = target; v != source; v = parent[v]) {
      const ResidualArcRef ref = reached_by[v];
      const std::int64_t residual = ref.forward
                                        ? upper[ref.arc] - flow[ref.arc]
                                        : flow[ref.arc] - lower[ref.arc];
      delta = std::min(delta, residual);
    }
    assert(delta > 0);
    for (int v = target; v != source; v = parent[v]) {
      const ResidualArcRef ref = reached_by[v];
      flow[ref.arc] += ref.forward ? delta : -delta;
    }
    excess[source] -= delta;
    excess[target] += delta;
  }
};

Rational objective_of(const std::vector<Rational>& costs,
                      const std::vector<std::int64_t>& flow) {
  Rational total(0);
  for (std::size_t a = 0; a < costs.size(); ++a) {
    if (flow[a] != 0) total += costs[a] * make_rational(flow[a]);
  }
  return total;
}

}  // namespace

ScalarSolution solve(const Network& network, const WeightVector& weights) {
  const auto costs = scalar_costs(network, weights);
  auto [lower, upper] = full_bounds(network);
  SspSolver solver(network, costs, std::move(lower), std::move(upper));
  solver.run();
  ScalarSolution solution;
  solution.flow = Flow{solver.flow};
  solution.potentials = std::move(solver.potentials);
  solution.objective_value = objective_of(costs, solution.flow.values);
  return solution;
}

ScalarSolution solve_lexicographic(const Network& network,
                                   const std::vector<int>& objective_order) {
  if (objective_order.empty() ||
      static_cast<int>(objective_order.size()) > network.d()) {
    throw std::invalid_argument("bad objective order");
  }
  std::vector<char> used(network.d(), 0);
  for (int k : objective_order) {
    if (k < 0 || k >= network.d() || used[k]) {
      throw std::invalid_argument("objective order is not a permutation");
    }
    used[k] = 1;
  }

  auto [lower, upper] = full_bounds(network);
  ScalarSolution result;
  std::vector<std::int64_t> current_flow;
  for (std::size_t stage = 0; stage < objective_order.size(); ++stage) {
    const int objective = objective_order[stage];
    std::vector<Rational> costs(network.m());
    for (int a = 0; a < network.m(); ++a) {
      costs[a] = network.arcs[a].cost[objective];
    }
    SspSolver solver(network, costs, lower, upper);
    solver.run();
    current_flow = solver.flow;
    if (stage == 0) {
      // The first-stage certificate stays valid for every later refinement:
      // subsequent stages only move flow on zero-reduced-cost arcs.
      result.potentials = solver.potentials;
      result.objective_value = objective_of(costs, current_flow);
    }
    if (stage + 1 == objective_order.size()) break;
    for (int a = 0; a < network.m(); ++a) {
      const Arc& arc = network.arcs[a];
      const Rational reduced = costs[a] - solver.potentials[arc.tail] +
                               solver.potentials[arc.head];
      if (reduced > 0) {
        upper[a] = lower[a];
      } else if (reduced < 0) {
        lower[a] = upper[a];
      }
    }
  }
  result.flow = Flow{current_flow};
  return result;
}

VerifyResult verify_optimal(const Network& network,
                            const WeightVector& weights, const Flow& flow) {
  if (!is_feasible(network, flow)) {
    throw std::invalid_argument("flow is not feasible");
  }
  const auto costs = scalar_costs(network, weights);
  auto [lower, upper] = full_bounds(network);
  const int n = network.n();

  // Bellman-Ford from a virtual source connected to every node; a
  // relaxation in round n proves a negative residual cycle.
  std::vector<Rational> dist(n, Rational(0));
  std::vector<int> parent(n, -1);
  std::vector<ResidualArcRef> parent_arc(n, ResidualArcRef{-1, true});
  const ResidualView view{network, costs, flow.values, lower, upper};
  int last_relaxed = -1;
  for (int round = 0; round < n; ++round) {
    last_relaxed = -1;
    view.for_each_arc([&](ResidualArcRef ref, int tail, int head,
                          const Rational& cost, std::int64_t) {
      if (dist[tail] + cost < dist[head]) {
        dist[head] = dist[tail] + cost;
        parent[head] = tail;
        parent_arc[head] = ref;
        last_relaxed = head;
      }
    });
    if (last_relaxed < 0) break;
  }

  VerifyResult result;
  if (last_relaxed < 0) {
    result.optimal = true;
    result.potentials.resize(n);
    for (int i = 0; i < n; ++i) result.potentials[i] = -dist[i];
    return result;
  }

  int node = last_relaxed;
  for (int i = 0; i < n; ++i) node = parent[node];
  std::vector<ResidualArcRef> cycle;
  int v = node;
  do {
    cycle.push_back(parent_arc[v]);
    v = parent[v];
  } while (v != node);
  std::reverse(cycle.begin(), cycle.end());
  result.optimal = false;
  result.negative_cycle = std::move(cycle);
  return result;
}

bool certifies(const Network& network, const WeightVector& weights,
               const ScalarSolution& solution) {
  if (!is_feasible(network, solution.flow)) return false;
  if (static_cast<int>(solution.potentials.size()) != network.n()) {
    return false;
  }
  const auto costs = scalar_costs(network, weights);
  if (objective_of(costs, solution.flow.values) != solution.objective_value) {
    return false;
  }
  auto [lower, upper] = full_bounds(network);
  bool ok = true;
  const ResidualView view{network, costs, solution.flow.values, lower, upper};
  view.for_each_arc([&](ResidualArcRef, int tail, int head,
                        const Rational& cost, std::int64_t) {
    if (cost - solution.potentials[tail] + solution.potentials[head] < 0) {
      ok = false;
    }
  });
  return ok;
}

}  // namespace moflow
