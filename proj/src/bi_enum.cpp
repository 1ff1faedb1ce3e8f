#include "moflow/bi_enum.hpp"

#include <cassert>
#include <map>
#include <stack>
#include <stdexcept>

namespace moflow {

namespace {

Rational dot2(const OutcomeVector& weights, const OutcomeVector& y) {
  return weights[0] * y[0] + weights[1] * y[1];
}

Rational outcome_component(const Network& network, const Flow& flow, int k) {
  Rational value(0);
  for (int a = 0; a < network.m(); ++a) {
    if (flow.values[a] != 0) {
      value += network.arcs[a].cost[k] * make_rational(flow.values[a]);
    }
  }
  return value;
}

}  // namespace

ExtremeList extreme_supported_points(const Network& network) {
  if (network.d() != 2) {
    throw std::invalid_argument("biobjective enumeration requires d == 2");
  }

  // Boundary points found so far, keyed by first objective. All of them
  // are nondominated (each optimal for some strictly positive weight), so
  // the key determines the point.
  std::map<Rational, ExtremePoint> chain;
  auto add_point = [&chain](const Network& net, const ScalarSolution& sol) {
    OutcomeVector y = outcome(net, sol.flow);
    auto [it, fresh] = chain.emplace(y[0], ExtremePoint{y, sol.flow});
    (void)fresh;
    return it->second.y;
  };

  const OutcomeVector left = add_point(network, solve_lexicographic(network, {0, 1}));
  const OutcomeVector right = add_point(network, solve_lexicographic(network, {1, 0}));

  std::stack<std::pair<OutcomeVector, OutcomeVector>> open;
  if (left != right) open.push({left, right});

  while (!open.empty()) {
    const auto [p, q] = open.top();
    open.pop();
    // Normal of the segment [p, q]; both components positive because the
    // chain points are nondominated and distinct.
    WeightVector lambda{{p[1] - q[1], q[0] - p[0]}};
    assert(lambda.strictly_positive());
    const ScalarSolution sol = solve(network, lambda);
    if (sol.objective_value < dot2(lambda.components, p)) {
      const OutcomeVector fresh = add_point(network, sol);
      // Strictly between: optima of positive weights cannot dominate or be
      // dominated by chain points.
      assert(p[0] < fresh[0] && fresh[0] < q[0]);
      open.push({p, fresh});
      open.push({fresh, q});
    }
  }

  // Drop collinear interior points: they are probe optima that landed in
  // the middle of an edge, not vertices.
  ExtremeList extremes;
  for (auto& [key, point] : chain) {
    while (extremes.size() >= 2) {
      const OutcomeVector& a = extremes[extremes.size() - 2].y;
      const OutcomeVector& b = extremes[extremes.size() - 1].y;
      const Rational cross = (b[0] - a[0]) * (point.y[1] - a[1]) -
                             (b[1] - a[1]) * (point.y[0] - a[0]);
      assert(cross >= 0);
      if (cross == 0) {
        extremes.pop_back();
      } else {
        break;
      }
    }
    extremes.push_back(std::move(point));
  }
  for (std::size_t i = 1; i < extremes.size(); ++i) {
    assert(extremes[i - 1].y[0] < extremes[i].y[0]);
    assert(extremes[i - 1].y[1] > extremes[i].y[1]);
  }
  return extremes;
}

std::vector<BiSweepTask> bi_sweep_tasks(const ExtremeList& extremes) {
  std::vector<BiSweepTask> tasks;
  for (std::size_t i = 0; i + 1 < extremes.size(); ++i) {
    BiSweepTask task;
    task.lambda = canonical_weights(WeightVector{
        {extremes[i].y[1] - extremes[i + 1].y[1],
         extremes[i + 1].y[0] - extremes[i].y[0]}});
    if (!task.lambda.strictly_positive()) {
      throw std::logic_error("facet weight vector is not strictly positive");
    }
    task.anchor = extremes[i].y;
    task.drop_anchor_c1 = i > 0;
    tasks.push_back(std::move(task));
  }
  return tasks;
}

void all_supported_flows_bi(const Network& network, const SupportedSink& sink) {
  const ExtremeList extremes = extreme_supported_points(network);

  if (extremes.size() == 1) {
    // Single extreme point: every feasible flow maps to it and the whole
    // set is optimal for uniform weights.
    const WeightVector lambda = uniform_weights(2);
    const ScalarSolution seed = solve(network, lambda);
    enumerate_optimal_flows(network, lambda, seed, nullptr,
                            [&](const Flow& flow) {
                              return sink(SupportedFlow{
                                  flow, outcome(network, flow), lambda});
                            });
    return;
  }

  for (const BiSweepTask& task : bi_sweep_tasks(extremes)) {
    const ScalarSolution seed = solve(network, task.lambda);
    assert(seed.objective_value == dot2(task.lambda.components, task.anchor));
    FlowPredicate keep;
    if (task.drop_anchor_c1) {
      // Flows sharing the anchor's first objective map to the anchor
      // itself and were emitted while sweeping the previous edge.
      const Rational anchor_c1 = task.anchor[0];
      keep = [&network, anchor_c1](const Flow& flow) {
        return outcome_component(network, flow, 0) != anchor_c1;
      };
    }
    const auto stats = enumerate_optimal_flows(
        network, task.lambda, seed, keep, [&](const Flow& flow) {
          return sink(
              SupportedFlow{flow, outcome(network, flow), task.lambda});
        });
    if (!stats.completed) return;
  }
}

std::vector<SupportedFlow> all_supported_flows_bi(const Network& network) {
  std::vector<SupportedFlow> result;
  all_supported_flows_bi(network, [&result](const SupportedFlow& flow) {
    result.push_back(flow);
    return true;
  });
  return result;
}

}  // namespace moflow
