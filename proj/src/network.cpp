#include "moflow/network.hpp"

#include <stdexcept>
#include <vector>

namespace moflow {

ValidationReport validate(const Network& network) {
  ValidationReport report;
  auto flag = [&report](const std::string& message) {
    report.violations.push_back(message);
  };

  if (network.node_count <= 0) flag("node count must be positive");
  if (network.objective_count < 1) flag("objective count must be >= 1");
  if (static_cast<int>(network.balance.size()) != network.node_count) {
    flag("balance vector length does not match node count");
    return report;
  }

  std::int64_t balance_sum = 0;
  for (int i = 0; i < network.node_count; ++i) {
    const std::int64_t b = network.balance[i];
    if (b > kMaxMagnitude || b < -kMaxMagnitude) {
      flag("balance of node " + std::to_string(i + 1) + " out of range");
    }
    balance_sum += b;
  }
  if (balance_sum != 0) {
    flag("balances do not sum to zero (sum = " + std::to_string(balance_sum) +
         ")");
  }

  for (int a = 0; a < network.m(); ++a) {
    const Arc& arc = network.arcs[a];
    const std::string tag = "arc " + std::to_string(a + 1);
    if (arc.tail < 0 || arc.tail >= network.node_count || arc.head < 0 ||
        arc.head >= network.node_count) {
      flag(tag + ": endpoint out of range");
      continue;
    }
    if (arc.tail == arc.head) flag(tag + ": self-loop");
    if (arc.lower < 0) flag(tag + ": negative lower bound");
    if (arc.lower > arc.upper) {
      flag(tag + ": lower bound exceeds upper bound");
    }
    if (arc.upper > kMaxMagnitude) flag(tag + ": upper bound out of range");
    if (static_cast<int>(arc.cost.size()) != network.objective_count) {
      flag(tag + ": cost dimension does not match objective count");
    }
  }

  // Connectivity of the underlying undirected graph.
  if (network.node_count > 0) {
    std::vector<std::vector<int>> adjacent(network.node_count);
    for (const Arc& arc : network.arcs) {
      if (arc.tail < 0 || arc.tail >= network.node_count || arc.head < 0 ||
          arc.head >= network.node_count) {
        continue;
      }
      adjacent[arc.tail].push_back(arc.head);
      adjacent[arc.head].push_back(arc.tail);
    }
    std::vector<char> seen(network.node_count, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacent[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != network.node_count) flag("graph is not connected");
  }

  return report;
}

bool is_feasible(const Network& network, const Flow& flow) {
  if (static_cast<int>(flow.values.size()) != network.m()) return false;
  std::vector<std::int64_t> net_out(network.node_count, 0);
  for (int a = 0; a < network.m(); ++a) {
    const Arc& arc = network.arcs[a];
    const std::int64_t f = flow.values[a];
    if (f < arc.lower || f > arc.upper) return false;
    net_out[arc.tail] += f;
    net_out[arc.head] -= f;
  }
  for (int i = 0; i < network.node_count; ++i) {
    if (net_out[i] != network.balance[i]) return false;
  }
  return true;
}

OutcomeVector outcome(const Network& network, const Flow& flow) {
  if (static_cast<int>(flow.values.size()) != network.m()) {
    throw std::invalid_argument("flow length does not match arc count");
  }
  OutcomeVector result(network.objective_count, Rational(0));
  for (int a = 0; a < network.m(); ++a) {
    if (flow.values[a] == 0) continue;
    const Rational multiplier = make_rational(flow.values[a]);
    for (int k = 0; k < network.objective_count; ++k) {
      result[k] += network.arcs[a].cost[k] * multiplier;
    }
  }
  return result;
}

Dominance compare_outcomes(const OutcomeVector& y, const OutcomeVector& y2) {
  if (y.size() != y2.size()) {
    throw std::invalid_argument("outcome dimension mismatch");
  }
  bool all_less = !y.empty();
  bool any_less = false;
  bool any_greater = false;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const int c = cmp(y[k], y2[k]);
    if (c < 0) any_less = true;
    if (c > 0) any_greater = true;
    if (c >= 0) all_less = false;
  }
  if (!any_less && !any_greater) return Dominance::equal;
  if (any_less && any_greater) return Dominance::incomparable;
  if (all_less) return Dominance::strictly_less;
  if (any_less) return Dominance::dominates;
  return Dominance::incomparable;
}

bool leq_dominates(const OutcomeVector& y, const OutcomeVector& y2) {
  const Dominance rel = compare_outcomes(y, y2);
  return rel == Dominance::strictly_less || rel == Dominance::dominates;
}

}  // namespace moflow
