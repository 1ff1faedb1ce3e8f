#ifndef MOFLOW_MO_ENUM_HPP
#define MOFLOW_MO_ENUM_HPP

#include <set>
#include <utility>
#include <vector>

#include "moflow/bi_enum.hpp"
#include "moflow/network.hpp"
#include "moflow/scalar_mcf.hpp"

namespace moflow {

struct UpperImageVertex {
  OutcomeVector y;
  Flow flow;  // one preimage
};

struct UpperImageFacet {
  WeightVector normal;  // coprime integers, componentwise >= 0
  Rational offset;      // minimal normal-weighted cost over the flows
  std::vector<int> incident_vertices;

  bool strictly_positive() const { return normal.strictly_positive(); }
};

//! Vertices and facets of conv(Y) + R^d_>= in exact rational arithmetic.
struct UpperImage {
  std::vector<UpperImageVertex> vertices;  // sorted lexicographically
  std::vector<UpperImageFacet> facets;     // sorted by normal
};

//! Outcome-space outer approximation: seed with d lexicographic solves,
//! then repeatedly cut the current hull with weighted-sum solves of its
//! facet normals until every facet is supported. Requires d >= 2 and a
//! feasible network.
UpperImage compute_upper_image(const Network& network);

//! Per-facet enumeration bookkeeping for the face sweep.
struct FaceContext {
  std::vector<std::vector<int>> adjacent;            // Q_u
  std::vector<std::vector<int>> processed_adjacent;  // delta_u
  std::vector<std::vector<WeightVector>> seen_weights;  // w_u
  std::set<int> closed;                              // B (top level)
  std::vector<int> stack_faces;                      // U-tilde snapshot
};

//! Q_u for every facet: two facets are adjacent iff their shared incident
//! vertices span an affine space of dimension d - 2.
FaceContext facet_adjacency(const UpperImage& ui);

//! Runs the face sweep over a computed upper image: first every strictly
//! positive facet, then strict convex combinations over intersections of
//! weakly nondominated facets. Each supported flow is emitted exactly once
//! (a flow is dropped when it attains the recorded optimum of any
//! previously processed weight).
class SupportedFlowEnumerator {
 public:
  SupportedFlowEnumerator(const Network& network, const UpperImage& ui);

  FaceContext& context() { return context_; }

  //! Full run (facet phase, then sub-face recursion).
  void run(const SupportedSink& sink, int jobs = 1);

  //! The sub-face recursion, exposed for targeted tests: explores strict
  //! convex combinations extending the given face stack.
  void consider_subfaces(std::vector<int> stack, std::set<int> closed,
                         const SupportedSink& sink);

 private:
  bool process_weight(const WeightVector& lambda, const SupportedSink& sink);
  bool weight_sweep(const WeightVector& lambda, const SupportedSink& sink,
                    const std::vector<Flow>* precollected);

  struct ProcessedWeight {
    WeightVector lambda;
    std::vector<Rational> arc_costs;  // lambda . c per arc, precomputed
    Rational optimum;
  };

  const Network& network_;
  const UpperImage& ui_;
  FaceContext context_;
  std::vector<int> weakly_;  // facets with a zero normal component
  // Every processed weight with its optimal value; the emission filter.
  std::vector<ProcessedWeight> processed_;
  bool stopped_ = false;
};

//! The complete set of supported efficient flows for d >= 2, each exactly
//! once. For d == 2 this agrees with the bi-objective pipeline.
void all_supported_flows(const Network& network, const SupportedSink& sink,
                         int jobs = 1);

std::vector<SupportedFlow> all_supported_flows(const Network& network);

}  // namespace moflow

#endif
