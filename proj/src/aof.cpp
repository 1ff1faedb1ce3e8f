#include "moflow/aof.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace moflow {

namespace {

// Dinic max-flow on small integer graphs; used only as a feasibility
// oracle for partially fixed flows.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to, std::int64_t capacity) {
    edges_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  std::int64_t run(int source, int sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      iter_ = head_;
      while (std::int64_t pushed = dfs(source, sink,
                                       std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    int next;
    std::int64_t capacity;
  };

  bool bfs(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e = head_[v]; e >= 0; e = edges_[e].next) {
        if (edges_[e].capacity > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          queue.push(edges_[e].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(int v, int sink, std::int64_t limit) {
    if (v == sink) return limit;
    for (int& e = iter_[v]; e >= 0; e = edges_[e].next) {
      Edge& edge = edges_[e];
      if (edge.capacity <= 0 || level_[edge.to] != level_[v] + 1) continue;
      const std::int64_t pushed =
          dfs(edge.to, sink, std::min(limit, edge.capacity));
      if (pushed > 0) {
        edge.capacity -= pushed;
        edges_[e ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

// Enumerates all feasible flows of the tightened bounds by fixing arc
// values in index order; every partial fixing is checked for completability
// with one max-flow call, so each explored branch yields at least one flow.
struct OptimalFlowEnumerator {
  const Network& network;
  const std::vector<std::int64_t>& lower;
  const std::vector<std::int64_t>& upper;
  const FlowPredicate& keep;
  const FlowSink& sink;

  std::vector<std::int64_t> values;
  std::vector<std::int64_t> imbalance;  // balance minus fixed net outflow
  FlowStreamStats stats;

  OptimalFlowEnumerator(const Network& net,
                        const std::vector<std::int64_t>& lo,
                        const std::vector<std::int64_t>& hi,
                        const FlowPredicate& keep_fn, const FlowSink& sink_fn)
      : network(net),
        lower(lo),
        upper(hi),
        keep(keep_fn),
        sink(sink_fn),
        values(net.m(), 0),
        imbalance(net.balance.begin(), net.balance.end()) {}

  bool completable(int next_arc) const {
    // Feasibility of { flow on arcs >= next_arc with the tightened bounds,
    // meeting the residual imbalances }: shift lower bounds out, then ask
    // for a saturating flow from surplus to deficit nodes.
    std::vector<std::int64_t> surplus(imbalance);
    for (int a = next_arc; a < network.m(); ++a) {
      surplus[network.arcs[a].tail] -= lower[a];
      surplus[network.arcs[a].head] += lower[a];
    }
    const int n = network.n();
    MaxFlow max_flow(n + 2);
    const int source = n;
    const int sink_node = n + 1;
    std::int64_t required = 0;
    for (int i = 0; i < n; ++i) {
      if (surplus[i] > 0) {
        max_flow.add_edge(source, i, surplus[i]);
        required += surplus[i];
      } else if (surplus[i] < 0) {
        max_flow.add_edge(i, sink_node, -surplus[i]);
      }
    }
    for (int a = next_arc; a < network.m(); ++a) {
      if (upper[a] > lower[a]) {
        max_flow.add_edge(network.arcs[a].tail, network.arcs[a].head,
                          upper[a] - lower[a]);
      }
    }
    return max_flow.run(source, sink_node) == required;
  }

  bool recurse(int arc_index) {
    if (arc_index == network.m()) {
      ++stats.total;
      const Flow flow{values};
      if (!keep || keep(flow)) {
        ++stats.emitted;
        if (sink && !sink(flow)) return false;
      }
      return true;
    }
    for (std::int64_t v = lower[arc_index]; v <= upper[arc_index]; ++v) {
      values[arc_index] = v;
      const Arc& arc = network.arcs[arc_index];
      imbalance[arc.tail] -= v;
      imbalance[arc.head] += v;
      const bool go = !completable(arc_index + 1) || recurse(arc_index + 1);
      imbalance[arc.tail] += v;
      imbalance[arc.head] -= v;
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

bool ZeroResidualNetwork::has_directed_cycle(const Network& network) const {
  std::vector<std::vector<int>> out(network.n());
  for (const auto& residual : arcs) {
    const Arc& arc = network.arcs[residual.arc];
    const int tail = residual.forward ? arc.tail : arc.head;
    const int head = residual.forward ? arc.head : arc.tail;
    out[tail].push_back(head);
  }
  // Iterative three-color DFS.
  std::vector<char> state(network.n(), 0);
  for (int start = 0; start < network.n(); ++start) {
    if (state[start]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        const int w = out[v][next++];
        if (state[w] == 1) return true;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

ZeroResidualNetwork zero_residual(const Network& network,
                                  const WeightVector& weights,
                                  const ScalarSolution& solution) {
  if (!certifies(network, weights, solution)) {
    throw CertificateError("seed solution is not certified optimal");
  }
  const auto costs = scalar_costs(network, weights);
  ZeroResidualNetwork zero;
  zero.tight_lower.resize(network.m());
  zero.tight_upper.resize(network.m());
  for (int a = 0; a < network.m(); ++a) {
    const Arc& arc = network.arcs[a];
    const Rational reduced = costs[a] - solution.potentials[arc.tail] +
                             solution.potentials[arc.head];
    const std::int64_t f = solution.flow.values[a];
    if (reduced > 0) {
      // Any optimal flow keeps this arc at its lower bound.
      zero.tight_lower[a] = arc.lower;
      zero.tight_upper[a] = arc.lower;
    } else if (reduced < 0) {
      zero.tight_lower[a] = arc.upper;
      zero.tight_upper[a] = arc.upper;
    } else {
      zero.tight_lower[a] = arc.lower;
      zero.tight_upper[a] = arc.upper;
      if (f < arc.upper) zero.arcs.push_back({a, true, arc.upper - f});
      if (f > arc.lower) zero.arcs.push_back({a, false, f - arc.lower});
    }
  }
  return zero;
}

FlowStreamStats enumerate_optimal_flows(const Network& network,
                                        const WeightVector& weights,
                                        const ScalarSolution& seed,
                                        const FlowPredicate& keep,
                                        const FlowSink& sink) {
  const ZeroResidualNetwork zero = zero_residual(network, weights, seed);
  OptimalFlowEnumerator enumerator(network, zero.tight_lower,
                                   zero.tight_upper, keep, sink);
  enumerator.stats.completed = enumerator.recurse(0);
  return enumerator.stats;
}

std::vector<Flow> all_optimal_flows(const Network& network,
                                    const WeightVector& weights,
                                    const ScalarSolution& seed) {
  std::vector<Flow> flows;
  enumerate_optimal_flows(network, weights, seed, nullptr,
                          [&flows](const Flow& flow) {
                            flows.push_back(flow);
                            return true;
                          });
  return flows;
}

}  // namespace moflow
