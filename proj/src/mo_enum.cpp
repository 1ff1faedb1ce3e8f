#include "moflow/mo_enum.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <map>
#include <stdexcept>

#include "moflow/aof.hpp"
#include "moflow/hull.hpp"
#include "moflow/oracle.hpp"

namespace moflow {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

int affine_rank(const std::vector<OutcomeVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(points[i].size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = points[i][k] - points[0][k];
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const int cols = static_cast<int>(points[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (int j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

UpperImage compute_upper_image(const Network& network) {
  const int d = network.d();
  if (d < 2) throw std::invalid_argument("upper image requires d >= 2");

  std::map<OutcomeVector, Flow, LexicographicLess> found;
  auto record = [&found, &network](const ScalarSolution& sol) {
    found.emplace(outcome(network, sol.flow), sol.flow);
  };

  for (int k = 0; k < d; ++k) {
    std::vector<int> order = {k};
    for (int j = 0; j < d; ++j) {
      if (j != k) order.push_back(j);
    }
    record(solve_lexicographic(network, order));
  }

  // Outer approximation: any facet whose weighted-sum optimum undercuts
  // its offset yields a new outcome point; repeat until all facets are
  // supported by the flows.
  std::map<std::vector<Rational>, Rational> probe_cache;
  OrthantHull hull;
  std::vector<OutcomeVector> points;
  while (true) {
    points.clear();
    points.reserve(found.size());
    for (const auto& [y, flow] : found) points.push_back(y);
    hull = orthant_hull(points, d);
    bool improved = false;
    for (const auto& facet : hull.facets) {
      auto cached = probe_cache.find(facet.normal);
      if (cached != probe_cache.end() && cached->second == facet.offset) {
        continue;  // already known supported at this offset
      }
      const ScalarSolution sol =
          solve(network, WeightVector{facet.normal});
      probe_cache[facet.normal] = sol.objective_value;
      if (sol.objective_value < facet.offset) {
        record(sol);
        improved = true;
      }
    }
    if (!improved) break;
  }

  UpperImage ui;
  std::vector<int> vertex_index(points.size(), -1);
  for (int point : hull.vertices) {
    vertex_index[point] = static_cast<int>(ui.vertices.size());
    ui.vertices.push_back(
        UpperImageVertex{points[point], found.at(points[point])});
  }
  for (const auto& facet : hull.facets) {
    UpperImageFacet out;
    out.normal = WeightVector{facet.normal};
    out.offset = facet.offset;
    for (int point : facet.incident_points) {
      if (vertex_index[point] >= 0) {
        out.incident_vertices.push_back(vertex_index[point]);
      }
    }
    ui.facets.push_back(std::move(out));
  }
  return ui;
}

FaceContext facet_adjacency(const UpperImage& ui) {
  const int facet_count = static_cast<int>(ui.facets.size());
  const int d = ui.vertices.empty()
                    ? 0
                    : static_cast<int>(ui.vertices.front().y.size());
  FaceContext context;
  context.adjacent.resize(facet_count);
  context.processed_adjacent.resize(facet_count);
  context.seen_weights.resize(facet_count);
  for (int u = 0; u < facet_count; ++u) {
    for (int v = u + 1; v < facet_count; ++v) {
      std::vector<OutcomeVector> shared;
      for (int i : ui.facets[u].incident_vertices) {
        const auto& other = ui.facets[v].incident_vertices;
        if (std::find(other.begin(), other.end(), i) != other.end()) {
          shared.push_back(ui.vertices[i].y);
        }
      }
      if (!shared.empty() && affine_rank(shared) == d - 2) {
        context.adjacent[u].push_back(v);
        context.adjacent[v].push_back(u);
      }
    }
  }
  return context;
}

SupportedFlowEnumerator::SupportedFlowEnumerator(const Network& network,
                                                 const UpperImage& ui)
    : network_(network), ui_(ui), context_(facet_adjacency(ui)) {
  for (int u = 0; u < static_cast<int>(ui_.facets.size()); ++u) {
    if (!ui_.facets[u].strictly_positive()) weakly_.push_back(u);
  }
}

bool SupportedFlowEnumerator::weight_sweep(
    const WeightVector& lambda, const SupportedSink& sink,
    const std::vector<Flow>* precollected) {
  const std::size_t known = processed_.size();
  // A flow attaining the recorded optimum of an earlier weight was emitted
  // during that earlier sweep.
  auto seen_before = [this, known](const Flow& flow) {
    for (std::size_t i = 0; i < known; ++i) {
      Rational value(0);
      for (int a = 0; a < network_.m(); ++a) {
        if (flow.values[a] != 0 && processed_[i].arc_costs[a] != 0) {
          value += processed_[i].arc_costs[a] * make_rational(flow.values[a]);
        }
      }
      if (value == processed_[i].optimum) return true;
    }
    return false;
  };

  const std::vector<Rational> costs = scalar_costs(network_, lambda);
  Rational optimum;
  if (precollected != nullptr) {
    assert(!precollected->empty());
    optimum = 0;
    for (int a = 0; a < network_.m(); ++a) {
      if (precollected->front().values[a] != 0) {
        optimum += costs[a] * make_rational(precollected->front().values[a]);
      }
    }
    for (const Flow& flow : *precollected) {
      if (seen_before(flow)) continue;
      if (!sink(SupportedFlow{flow, outcome(network_, flow), lambda})) {
        stopped_ = true;
        break;
      }
    }
  } else {
    const ScalarSolution seed = solve(network_, lambda);
    optimum = seed.objective_value;
    const auto stats = enumerate_optimal_flows(
        network_, lambda, seed,
        [&seen_before](const Flow& flow) { return !seen_before(flow); },
        [&](const Flow& flow) {
          return sink(SupportedFlow{flow, outcome(network_, flow), lambda});
        });
    if (!stats.completed) stopped_ = true;
  }
  processed_.push_back(ProcessedWeight{lambda, costs, optimum});
  return !stopped_;
}

bool SupportedFlowEnumerator::process_weight(const WeightVector& lambda,
                                             const SupportedSink& sink) {
  return weight_sweep(lambda, sink, nullptr);
}

void SupportedFlowEnumerator::consider_subfaces(std::vector<int> stack,
                                                std::set<int> closed,
                                                const SupportedSink& sink) {
  const int d = network_.d();
  // Candidates adjacent to every stack member, weakly nondominated, not
  // yet closed and not already stacked.
  std::vector<int> candidates;
  for (int u : weakly_) {
    if (closed.count(u) ||
        std::find(stack.begin(), stack.end(), u) != stack.end()) {
      continue;
    }
    bool adjacent_to_all = true;
    for (int member : stack) {
      const auto& q = context_.adjacent[member];
      if (std::find(q.begin(), q.end(), u) == q.end()) {
        adjacent_to_all = false;
        break;
      }
    }
    if (adjacent_to_all) candidates.push_back(u);
  }

  for (int u : candidates) {
    if (stopped_) return;
    stack.push_back(u);
    if (static_cast<int>(stack.size()) <= d - 1) {
      // Uniform strict convex combination; componentwise positivity only
      // depends on the support union.
      std::vector<Rational> combined(d, Rational(0));
      for (int member : stack) {
        for (int k = 0; k < d; ++k) {
          combined[k] += ui_.facets[member].normal.components[k];
        }
      }
      const WeightVector lambda =
          canonical_weights(WeightVector{std::move(combined)});
      if (lambda.strictly_positive()) {
        context_.stack_faces = stack;
        if (!weight_sweep(lambda, sink, nullptr)) {
          return;
        }
        for (int member : stack) {
          for (int neighbor : context_.adjacent[member]) {
            context_.seen_weights[neighbor].push_back(lambda);
          }
        }
      } else {
        consider_subfaces(stack, closed, sink);
        if (stopped_) return;
      }
    }
    stack.pop_back();
    closed.insert(u);
  }
}

void SupportedFlowEnumerator::run(const SupportedSink& sink, int jobs) {
  stopped_ = false;

  // Degenerate upper image: a single vertex is the ideal point, optimal
  // for every weight; enumerate it under uniform weights.
  if (ui_.vertices.size() == 1) {
    process_weight(canonical_weights(uniform_weights(network_.d())), sink);
    return;
  }

  // Phase one: strictly positive facets.
  std::vector<int> positive;
  for (int u = 0; u < static_cast<int>(ui_.facets.size()); ++u) {
    if (ui_.facets[u].strictly_positive()) positive.push_back(u);
  }
  if (jobs > 1 && positive.size() > 1) {
    // Collect per-facet optimal flows concurrently, then filter and emit
    // in facet order; the result matches the sequential sweep exactly.
    std::vector<std::future<std::vector<Flow>>> tasks;
    for (int u : positive) {
      tasks.push_back(std::async(std::launch::async, [this, u]() {
        return all_optimal_flows(network_, ui_.facets[u].normal,
                                 solve(network_, ui_.facets[u].normal));
      }));
    }
    for (std::size_t i = 0; i < positive.size() && !stopped_; ++i) {
      const std::vector<Flow> flows = tasks[i].get();
      const int u = positive[i];
      weight_sweep(ui_.facets[u].normal, sink, &flows);
      for (int neighbor : context_.adjacent[u]) {
        context_.processed_adjacent[neighbor].push_back(u);
        context_.seen_weights[neighbor].push_back(ui_.facets[u].normal);
      }
    }
    // Remaining futures (after an early stop) join in their destructors.
  } else {
    for (int u : positive) {
      if (stopped_) return;
      if (!weight_sweep(ui_.facets[u].normal, sink, nullptr)) return;
      for (int neighbor : context_.adjacent[u]) {
        context_.processed_adjacent[neighbor].push_back(u);
        context_.seen_weights[neighbor].push_back(ui_.facets[u].normal);
      }
    }
  }
  if (stopped_) return;

  // Phase two: sub-faces of weakly nondominated facets.
  for (int u : weakly_) {
    if (stopped_) return;
    consider_subfaces({u}, context_.closed, sink);
    context_.closed.insert(u);
  }
}

void all_supported_flows(const Network& network, const SupportedSink& sink,
                         int jobs) {
  const UpperImage ui = compute_upper_image(network);
  SupportedFlowEnumerator enumerator(network, ui);
  enumerator.run(sink, jobs);
}

std::vector<SupportedFlow> all_supported_flows(const Network& network) {
  std::vector<SupportedFlow> result;
  all_supported_flows(network, [&result](const SupportedFlow& flow) {
    result.push_back(flow);
    return true;
  });
  return result;
}

}  // namespace moflow
