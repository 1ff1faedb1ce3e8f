#include "moflow/hull.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace moflow {

namespace {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b) {
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

int rank_of(std::vector<Vec> matrix) {
  int rank = 0;
  const int cols = matrix.empty() ? 0 : static_cast<int>(matrix[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(matrix.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(matrix.size()); ++r) {
      if (matrix[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(matrix[rank], matrix[pivot]);
    for (int r = rank + 1; r < static_cast<int>(matrix.size()); ++r) {
      if (matrix[r][c] == 0) continue;
      const Rational f = matrix[r][c] / matrix[rank][c];
      for (int j = c; j < cols; ++j) {
        matrix[r][j] -= f * matrix[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

// Inverts a square rational matrix by Gauss-Jordan; the caller guarantees
// nonsingularity.
std::vector<Vec> invert(std::vector<Vec> a) {
  const int n = static_cast<int>(a.size());
  std::vector<Vec> inv(n, Vec(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::logic_error("singular matrix");
    std::swap(a[c], a[pivot]);
    std::swap(inv[c], inv[pivot]);
    const Rational f = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational g = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= g * a[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

struct Ray {
  Vec direction;            // coprime integer components
  std::vector<char> tight;  // per processed inequality
};

// Extreme rays of { w : g . w >= 0 for all generators g } by incremental
// double description, starting from a simplicial subcone.
std::vector<Vec> dual_cone_extreme_rays(const std::vector<Vec>& generators,
                                        int dim, int initial_count) {
  // The first initial_count generators are linearly independent and span.
  std::vector<Vec> base(generators.begin(),
                        generators.begin() + initial_count);
  const std::vector<Vec> inverse = invert(base);

  std::vector<Ray> rays;
  for (int j = 0; j < dim; ++j) {
    Ray ray;
    ray.direction.resize(dim);
    for (int i = 0; i < dim; ++i) ray.direction[i] = inverse[i][j];
    ray.direction = scale_to_coprime_integers(ray.direction);
    ray.tight.assign(generators.size(), 0);
    for (int g = 0; g < initial_count; ++g) ray.tight[g] = (g != j);
    rays.push_back(std::move(ray));
  }

  for (std::size_t g = initial_count; g < generators.size(); ++g) {
    const Vec& ineq = generators[g];
    std::vector<Rational> value(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(rays[r].direction, ineq);
      if (value[r] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        rays[r].tight[g] = (value[r] == 0);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      Ray kept = rays[r];
      kept.tight[g] = (value[r] == 0);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        // Combinatorial adjacency: the common tight set of the pair must
        // not be contained in any other ray's tight set.
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          bool contains = true;
          for (std::size_t t = 0; t < g; ++t) {
            if (rays[p].tight[t] && rays[q].tight[t] && !rays[o].tight[t]) {
              contains = false;
              break;
            }
          }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.direction.resize(dim);
        for (int i = 0; i < dim; ++i) {
          fresh.direction[i] = value[p] * rays[q].direction[i] -
                               value[q] * rays[p].direction[i];
        }
        fresh.direction = scale_to_coprime_integers(fresh.direction);
        fresh.tight.assign(generators.size(), 0);
        for (std::size_t t = 0; t <= g; ++t) {
          fresh.tight[t] = (dot(fresh.direction, generators[t]) == 0);
        }
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<Vec> result;
  result.reserve(rays.size());
  for (auto& ray : rays) result.push_back(std::move(ray.direction));
  return result;
}

}  // namespace

OrthantHull orthant_hull(const std::vector<OutcomeVector>& points, int d) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != d) {
      throw std::invalid_argument("point dimension mismatch");
    }
  }
  const int dim = d + 1;

  // Homogenized generators: the d coordinate rays at height 0, then the
  // points at height 1. Ray generators plus one point are independent, so
  // they seed the simplicial start cone.
  std::vector<Vec> generators;
  generators.reserve(points.size() + d);
  {
    Vec first(dim, Rational(0));
    first[0] = 1;
    for (int k = 0; k < d; ++k) first[k + 1] = points[0][k];
    generators.push_back(std::move(first));
  }
  for (int k = 0; k < d; ++k) {
    Vec ray(dim, Rational(0));
    ray[k + 1] = 1;
    generators.push_back(std::move(ray));
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vec lifted(dim, Rational(0));
    lifted[0] = 1;
    for (int k = 0; k < d; ++k) lifted[k + 1] = points[i][k];
    generators.push_back(std::move(lifted));
  }

  const auto rays = dual_cone_extreme_rays(generators, dim, dim);

  OrthantHull hull;
  for (const auto& ray : rays) {
    bool all_zero = true;
    for (int k = 0; k < d; ++k) {
      if (ray[k + 1] != 0) all_zero = false;
    }
    if (all_zero) continue;  // the height inequality, no facet of P
    HullFacet facet;
    facet.normal.assign(ray.begin() + 1, ray.end());
    facet.offset = -ray[0];
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
      if (dot(facet.normal, points[i]) == facet.offset) {
        facet.incident_points.push_back(i);
      }
    }
    hull.facets.push_back(std::move(facet));
  }
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const HullFacet& a, const HullFacet& b) {
              for (std::size_t k = 0; k < a.normal.size(); ++k) {
                const int c = cmp(a.normal[k], b.normal[k]);
                if (c != 0) return c < 0;
              }
              return a.offset < b.offset;
            });

  // A point is a vertex iff its active facet normals have full rank.
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    std::vector<Vec> active;
    for (const auto& facet : hull.facets) {
      if (std::find(facet.incident_points.begin(), facet.incident_points.end(),
                    i) != facet.incident_points.end()) {
        active.push_back(facet.normal);
      }
    }
    if (rank_of(std::move(active)) == d) hull.vertices.push_back(i);
  }
  return hull;
}

bool hull_contains(const OrthantHull& hull, const OutcomeVector& point) {
  for (const auto& facet : hull.facets) {
    if (dot(facet.normal, point) < facet.offset) return false;
  }
  return true;
}

}  // namespace moflow
