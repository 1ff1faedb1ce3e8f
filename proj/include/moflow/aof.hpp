#ifndef MOFLOW_AOF_HPP
#define MOFLOW_AOF_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "moflow/network.hpp"
#include "moflow/scalar_mcf.hpp"

namespace moflow {

struct CertificateError : std::runtime_error {
  explicit CertificateError(const std::string& message)
      : std::runtime_error(message) {}
};

struct ZeroResidualArc {
  int arc;
  bool forward;
  std::int64_t capacity;
};

//! Residual graph of an optimal flow restricted to reduced-cost-zero arcs.
//! Its integer circulations generate exactly the alternative optima, so the
//! set of optimal flows equals the feasible flows of the tightened bounds.
struct ZeroResidualNetwork {
  std::vector<ZeroResidualArc> arcs;
  std::vector<std::int64_t> tight_lower;  // per original arc
  std::vector<std::int64_t> tight_upper;

  //! True iff the zero-cost residual arcs contain a directed cycle.
  bool has_directed_cycle(const Network& network) const;
};

//! Builds the zero-residual network for a certified optimal solution.
//! Throws CertificateError when the certificate check fails.
ZeroResidualNetwork zero_residual(const Network& network,
                                  const WeightVector& weights,
                                  const ScalarSolution& solution);

using FlowPredicate = std::function<bool(const Flow&)>;
using FlowSink = std::function<bool(const Flow&)>;  // false stops the stream

struct FlowStreamStats {
  std::uint64_t emitted = 0;   // flows passed to the sink
  std::uint64_t total = 0;     // optimal flows found (before keep filter)
  bool completed = true;       // false when the sink stopped the stream
};

//! Streams every optimal integer flow of (P_lambda) exactly once, in
//! lexicographic order of the arc-value vector. The keep predicate filters
//! emission only; it never prunes the search. Enumeration branches on arc
//! values in index order and prunes infeasible prefixes with a max-flow
//! feasibility check. Throws CertificateError on a non-optimal seed.
FlowStreamStats enumerate_optimal_flows(const Network& network,
                                        const WeightVector& weights,
                                        const ScalarSolution& seed,
                                        const FlowPredicate& keep,
                                        const FlowSink& sink);

//! Convenience: collects the full emission.
std::vector<Flow> all_optimal_flows(const Network& network,
                                    const WeightVector& weights,
                                    const ScalarSolution& seed);

}  // namespace moflow

#endif
