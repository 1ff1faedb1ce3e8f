#include "moflow/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "moflow/simplex.hpp"

namespace moflow {

namespace {

// Edmonds-Karp feasibility check for the oracle enumeration. Deliberately
// a separate implementation from the one backing the optimal-flow
// enumerator, so the two routes stay independent.
class FeasibilityCheck {
 public:
  explicit FeasibilityCheck(int nodes) : n_(nodes), adjacency_(nodes) {}

  void add_edge(int from, int to, std::int64_t capacity) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, to, capacity});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, from, 0});
  }

  std::int64_t max_flow(int source, int sink) {
    std::int64_t total = 0;
    while (true) {
      std::vector<int> via(n_, -1);
      std::vector<int> queue = {source};
      via[source] = -2;
      for (std::size_t q = 0; q < queue.size() && via[sink] < 0; ++q) {
        const int v = queue[q];
        for (int e : adjacency_[v]) {
          if (edges_[e].capacity > 0 && via[edges_[e].to] < 0) {
            via[edges_[e].to] = e;
            queue.push_back(edges_[e].to);
          }
        }
      }
      if (via[sink] < 0) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int v = sink; v != source; v = edges_[via[v]].from) {
        push = std::min(push, edges_[via[v]].capacity);
      }
      for (int v = sink; v != source; v = edges_[via[v]].from) {
        edges_[via[v]].capacity -= push;
        edges_[via[v] ^ 1].capacity += push;
      }
      total += push;
    }
  }

 private:
  struct Edge {
    int from;
    int to;
    std::int64_t capacity;
  };
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

struct BruteForceEnumerator {
  const Network& network;
  std::uint64_t cap;

  std::vector<std::int64_t> values;
  std::vector<std::int64_t> imbalance;
  // Per-node sums of bounds over not-yet-fixed arcs.
  std::vector<std::int64_t> out_lo, out_hi, in_lo, in_hi;
  std::vector<Flow> found;

  BruteForceEnumerator(const Network& net, std::uint64_t limit)
      : network(net),
        cap(limit),
        values(net.m(), 0),
        imbalance(net.balance.begin(), net.balance.end()),
        out_lo(net.n(), 0),
        out_hi(net.n(), 0),
        in_lo(net.n(), 0),
        in_hi(net.n(), 0) {
    for (const Arc& arc : net.arcs) {
      out_lo[arc.tail] += arc.lower;
      out_hi[arc.tail] += arc.upper;
      in_lo[arc.head] += arc.lower;
      in_hi[arc.head] += arc.upper;
    }
  }

  bool node_possible(int i) const {
    // Remaining arcs must be able to produce exactly imbalance[i] net
    // outflow at node i.
    return out_lo[i] - in_hi[i] <= imbalance[i] &&
           imbalance[i] <= out_hi[i] - in_lo[i];
  }

  bool remainder_feasible(int next_arc) const {
    std::vector<std::int64_t> surplus(imbalance);
    for (int a = next_arc; a < network.m(); ++a) {
      surplus[network.arcs[a].tail] -= network.arcs[a].lower;
      surplus[network.arcs[a].head] += network.arcs[a].lower;
    }
    FeasibilityCheck check(network.n() + 2);
    const int source = network.n();
    const int sink = network.n() + 1;
    std::int64_t required = 0;
    for (int i = 0; i < network.n(); ++i) {
      if (surplus[i] > 0) {
        check.add_edge(source, i, surplus[i]);
        required += surplus[i];
      } else if (surplus[i] < 0) {
        check.add_edge(i, sink, -surplus[i]);
      }
    }
    for (int a = next_arc; a < network.m(); ++a) {
      if (network.arcs[a].upper > network.arcs[a].lower) {
        check.add_edge(network.arcs[a].tail, network.arcs[a].head,
                       network.arcs[a].upper - network.arcs[a].lower);
      }
    }
    return check.max_flow(source, sink) == required;
  }

  void recurse(int arc_index) {
    if (arc_index == network.m()) {
      if (found.size() >= cap) {
        throw CapExceededError("oracle cap exceeded (" + std::to_string(cap) +
                               " flows)");
      }
      found.push_back(Flow{values});
      return;
    }
    const Arc& arc = network.arcs[arc_index];
    out_lo[arc.tail] -= arc.lower;
    out_hi[arc.tail] -= arc.upper;
    in_lo[arc.head] -= arc.lower;
    in_hi[arc.head] -= arc.upper;
    for (std::int64_t v = arc.lower; v <= arc.upper; ++v) {
      values[arc_index] = v;
      imbalance[arc.tail] -= v;
      imbalance[arc.head] += v;
      if (node_possible(arc.tail) && node_possible(arc.head) &&
          remainder_feasible(arc_index + 1)) {
        recurse(arc_index + 1);
      }
      imbalance[arc.tail] += v;
      imbalance[arc.head] -= v;
    }
    out_lo[arc.tail] += arc.lower;
    out_hi[arc.tail] += arc.upper;
    in_lo[arc.head] += arc.lower;
    in_hi[arc.head] += arc.upper;
  }
};

}  // namespace

std::vector<Flow> enumerate_all_flows(const Network& network,
                                      std::uint64_t cap) {
  BruteForceEnumerator enumerator(network, cap);
  enumerator.recurse(0);
  return std::move(enumerator.found);
}

bool LexicographicLess::operator()(const OutcomeVector& a,
                                   const OutcomeVector& b) const {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string to_string(OutcomeLabel label) {
  switch (label) {
    case OutcomeLabel::supported:
      return "supported";
    case OutcomeLabel::weakly_supported_only:
      return "weakly-supported-only";
    case OutcomeLabel::unsupported:
      return "unsupported";
    case OutcomeLabel::dominated:
      return "dominated";
  }
  return "?";
}

const OutcomeClass* Classification::find(const OutcomeVector& y) const {
  for (const auto& entry : outcomes) {
    if (entry.y == y) return &entry;
  }
  return nullptr;
}

OutcomeLabel Classification::label_of_flow(int flow_id) const {
  for (const auto& entry : outcomes) {
    if (std::find(entry.flow_ids.begin(), entry.flow_ids.end(), flow_id) !=
        entry.flow_ids.end()) {
      return entry.label;
    }
  }
  throw std::out_of_range("unknown flow id");
}

std::vector<Flow> Classification::flows_with_label(OutcomeLabel label) const {
  std::vector<Flow> result;
  for (const auto& entry : outcomes) {
    if (entry.label != label) continue;
    for (int id : entry.flow_ids) result.push_back(flows[id]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<OutcomeVector> Classification::outcomes_with_label(
    OutcomeLabel label) const {
  std::vector<OutcomeVector> result;
  for (const auto& entry : outcomes) {
    if (entry.label == label) result.push_back(entry.y);
  }
  return result;
}

Classification classify(const Network& network, std::uint64_t cap) {
  Classification result;
  result.flows = enumerate_all_flows(network, cap);

  std::map<OutcomeVector, std::vector<int>, LexicographicLess> by_outcome;
  for (int id = 0; id < static_cast<int>(result.flows.size()); ++id) {
    by_outcome[outcome(network, result.flows[id])].push_back(id);
  }

  std::vector<OutcomeVector> distinct;
  distinct.reserve(by_outcome.size());
  for (const auto& [y, ids] : by_outcome) distinct.push_back(y);

  const int d = network.d();
  for (const auto& [y, ids] : by_outcome) {
    OutcomeClass entry;
    entry.y = y;
    entry.flow_ids = ids;

    const OutcomeVector* dominator = nullptr;
    for (const auto& other : distinct) {
      if (leq_dominates(other, y)) {
        bool other_dominated = false;
        for (const auto& third : distinct) {
          if (leq_dominates(third, other)) {
            other_dominated = true;
            break;
          }
        }
        if (!other_dominated) {
          dominator = &other;
          break;
        }
      }
    }
    if (dominator != nullptr) {
      entry.label = OutcomeLabel::dominated;
      entry.dominated_by = *dominator;
      result.outcomes.push_back(std::move(entry));
      continue;
    }

    // Support LP over variables (lambda_1..lambda_d, t_pos, t_neg).
    std::vector<Rational> objective(d + 2, Rational(0));
    objective[d] = 1;
    objective[d + 1] = -1;
    std::vector<LpRow> rows;
    LpRow simplex_row;
    simplex_row.coefficients.assign(d + 2, Rational(0));
    for (int k = 0; k < d; ++k) simplex_row.coefficients[k] = 1;
    simplex_row.sense = RowSense::eq;
    simplex_row.rhs = 1;
    rows.push_back(simplex_row);
    for (int k = 0; k < d; ++k) {
      LpRow row;
      row.coefficients.assign(d + 2, Rational(0));
      row.coefficients[k] = 1;
      row.coefficients[d] = -1;
      row.coefficients[d + 1] = 1;
      row.sense = RowSense::ge;
      row.rhs = 0;
      rows.push_back(std::move(row));
    }
    for (const auto& other : distinct) {
      if (other == y) continue;
      LpRow row;
      row.coefficients.assign(d + 2, Rational(0));
      for (int k = 0; k < d; ++k) {
        row.coefficients[k] = other[k] - y[k];
      }
      row.sense = RowSense::ge;
      row.rhs = 0;
      rows.push_back(std::move(row));
    }

    const LpResult lp = lp_maximize(objective, rows);
    if (lp.status != LpStatus::optimal || lp.objective < 0) {
      entry.label = OutcomeLabel::unsupported;
    } else {
      entry.label = lp.objective > 0 ? OutcomeLabel::supported
                                     : OutcomeLabel::weakly_supported_only;
      WeightVector witness;
      witness.components.assign(lp.solution.begin(), lp.solution.begin() + d);
      assert(witness.valid());
      entry.witness = std::move(witness);
    }
    result.outcomes.push_back(std::move(entry));
  }
  return result;
}

}  // namespace moflow
