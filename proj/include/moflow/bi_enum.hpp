#ifndef MOFLOW_BI_ENUM_HPP
#define MOFLOW_BI_ENUM_HPP

#include <functional>
#include <vector>

#include "moflow/aof.hpp"
#include "moflow/network.hpp"
#include "moflow/scalar_mcf.hpp"

namespace moflow {

struct ExtremePoint {
  OutcomeVector y;
  Flow flow;
};

//! Extreme supported points sorted by increasing first objective (and
//! strictly decreasing second); consecutive pairs span the maximally
//! nondominated edges.
using ExtremeList = std::vector<ExtremePoint>;

//! All vertices of conv(Y) + R^2_>= with one preimage flow each, computed
//! by the dichotomic scheme: lexicographic solves for the two endpoints,
//! then recursive weighted-sum probes of open pairs. Requires d == 2.
ExtremeList extreme_supported_points(const Network& network);

struct SupportedFlow {
  Flow flow;
  OutcomeVector y;
  WeightVector witness;  // strictly positive weights certifying the flow
};

using SupportedSink = std::function<bool(const SupportedFlow&)>;

//! One facet sweep of the bi-objective enumeration: the weight vector of
//! the edge between consecutive extremes i and i+1, and whether emitted
//! flows must differ from the left anchor in the first objective (the
//! repetition filter, active for every sweep but the first).
struct BiSweepTask {
  WeightVector lambda;
  OutcomeVector anchor;
  bool drop_anchor_c1 = false;
};

std::vector<BiSweepTask> bi_sweep_tasks(const ExtremeList& extremes);

//! Streams the complete set of supported efficient flows of a bi-objective
//! instance, each exactly once. Requires d == 2.
void all_supported_flows_bi(const Network& network, const SupportedSink& sink);

std::vector<SupportedFlow> all_supported_flows_bi(const Network& network);

}  // namespace moflow

#endif
