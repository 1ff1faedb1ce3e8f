#ifndef MOFLOW_SIMPLEX_HPP
#define MOFLOW_SIMPLEX_HPP

#include <vector>

#include "moflow/rational.hpp"

namespace moflow {

enum class LpStatus { optimal, infeasible, unbounded };

enum class RowSense { le, eq, ge };

struct LpRow {
  std::vector<Rational> coefficients;
  RowSense sense = RowSense::le;
  Rational rhs;
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  std::vector<Rational> solution;
};

//! Maximizes objective . x subject to the rows and x >= 0, with a dense
//! two-phase tableau simplex over exact rationals. Bland's rule, so the
//! solve terminates on degenerate instances. Small problems only.
LpResult lp_maximize(const std::vector<Rational>& objective,
                     const std::vector<LpRow>& rows);

}  // namespace moflow

#endif
