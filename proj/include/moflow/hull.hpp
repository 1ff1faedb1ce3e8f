#ifndef MOFLOW_HULL_HPP
#define MOFLOW_HULL_HPP

#include <vector>

#include "moflow/network.hpp"
#include "moflow/rational.hpp"

namespace moflow {

struct HullFacet {
  std::vector<Rational> normal;      // coprime integers, componentwise >= 0
  Rational offset;                   // facet inequality: normal . y >= offset
  std::vector<int> incident_points;  // input points with normal . p == offset
};

struct OrthantHull {
  std::vector<HullFacet> facets;  // all facets, sorted by normal
  std::vector<int> vertices;      // input points that are extreme points
};

//! Exact H-representation of conv(points) + R^d_>=, computed by the double
//! description method on the homogenization cone (points lifted to height 1,
//! the d coordinate rays to height 0). The polyhedron is full-dimensional
//! and pointed for any nonempty point set, and all facet normals are
//! componentwise nonnegative. Intended for small d and few points.
OrthantHull orthant_hull(const std::vector<OutcomeVector>& points, int d);

//! True iff normal . p >= offset holds for every facet and point (used as a
//! test invariant).
bool hull_contains(const OrthantHull& hull, const OutcomeVector& point);

}  // namespace moflow

#endif
