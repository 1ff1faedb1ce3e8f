#ifndef MOFLOW_NETWORK_HPP
#define MOFLOW_NETWORK_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "moflow/rational.hpp"

namespace moflow {

// Capacities, balances and flow values are 64-bit integers. Validation
// rejects instances whose bounds exceed kMaxMagnitude, so that sums over
// all arcs stay far away from overflow.
inline constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 31;

struct Arc {
  int tail = 0;  // 0-based node id
  int head = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::vector<Rational> cost;  // one coefficient per objective
};

//! A directed network with integer balances and capacity bounds and
//! d-dimensional rational arc costs. Immutable value object once built.
struct Network {
  int node_count = 0;
  int objective_count = 1;
  std::vector<std::int64_t> balance;  // size node_count
  std::vector<Arc> arcs;

  int n() const { return node_count; }
  int m() const { return static_cast<int>(arcs.size()); }
  int d() const { return objective_count; }
};

//! Integer arc-flow values, indexed identically to Network::arcs.
struct Flow {
  std::vector<std::int64_t> values;

  friend auto operator<=>(const Flow&, const Flow&) = default;
};

using OutcomeVector = std::vector<Rational>;

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

//! Checks capacity order, balance sum, connectivity, self-loops, node ids
//! and the overflow-safe magnitude range. Report-style, never throws.
ValidationReport validate(const Network& network);

//! True iff the flow respects capacity bounds and every node balance.
bool is_feasible(const Network& network, const Flow& flow);

//! The image C*f of a flow, exact. Throws std::invalid_argument when the
//! flow vector length does not match the arc count.
OutcomeVector outcome(const Network& network, const Flow& flow);

enum class Dominance {
  strictly_less,  // y < y2 in every component
  dominates,      // y <= y2 componentwise and y != y2
  equal,
  incomparable,
};

//! Componentwise Pareto comparison. Throws std::invalid_argument on
//! dimension mismatch.
Dominance compare_outcomes(const OutcomeVector& y, const OutcomeVector& y2);

//! True iff y <= y2 componentwise and y != y2 (covers strictly_less).
bool leq_dominates(const OutcomeVector& y, const OutcomeVector& y2);

}  // namespace moflow

#endif
