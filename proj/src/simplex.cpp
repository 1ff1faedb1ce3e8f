#include "moflow/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace moflow {

namespace {

// Dense tableau with explicit basis. Phase numbers refer to the usual
// two-phase method: phase 1 minimizes the artificial sum, phase 2 the
// caller's objective (as a minimization of its negation).
struct Tableau {
  int structural = 0;  // caller variables
  int total = 0;       // structural + slack/surplus + artificial
  int first_artificial = 0;
  std::vector<std::vector<Rational>> rows;  // m x total
  std::vector<Rational> rhs;                // m, kept nonnegative
  std::vector<int> basis;                   // m

  void pivot(int row, int col) {
    const Rational factor = rows[row][col];
    assert(factor != 0);
    for (auto& value : rows[row]) value /= factor;
    rhs[row] /= factor;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == row || rows[r][col] == 0) continue;
      const Rational scale = rows[r][col];
      for (int c = 0; c < total; ++c) {
        rows[r][c] -= scale * rows[row][c];
      }
      rhs[r] -= scale * rhs[row];
    }
    basis[row] = col;
  }

  // Minimizes cost . x from the current basic feasible point. Bland's rule
  // throughout. Returns false when unbounded below.
  bool minimize(const std::vector<Rational>& cost, bool allow_artificial) {
    while (true) {
      // Reduced costs d_j = c_j - c_B B^-1 A_j, recomputed each round;
      // the tableaus here are tiny.
      int entering = -1;
      for (int j = 0; j < total; ++j) {
        if (!allow_artificial && j >= first_artificial) break;
        Rational reduced = cost[j];
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (cost[basis[r]] != 0 && rows[r][j] != 0) {
            reduced -= cost[basis[r]] * rows[r][j];
          }
        }
        if (reduced < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][entering] <= 0) continue;
        const Rational ratio = rhs[r] / rows[r][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = static_cast<int>(r);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpResult lp_maximize(const std::vector<Rational>& objective,
                     const std::vector<LpRow>& rows) {
  const int n = static_cast<int>(objective.size());
  const int m = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw std::invalid_argument("row dimension mismatch");
    }
  }

  // Count slack/surplus columns, then artificials.
  int slack_count = 0;
  for (const auto& row : rows) {
    if (row.sense != RowSense::eq) ++slack_count;
  }
  Tableau tab;
  tab.structural = n;
  tab.first_artificial = n + slack_count;
  tab.total = tab.first_artificial + m;
  tab.rows.assign(m, std::vector<Rational>(tab.total, Rational(0)));
  tab.rhs.resize(m);
  tab.basis.assign(m, -1);

  int next_slack = n;
  for (int r = 0; r < m; ++r) {
    const bool negate = rows[r].rhs < 0;
    RowSense sense = rows[r].sense;
    if (negate && sense != RowSense::eq) {
      sense = sense == RowSense::le ? RowSense::ge : RowSense::le;
    }
    for (int j = 0; j < n; ++j) {
      tab.rows[r][j] =
          negate ? -rows[r].coefficients[j] : rows[r].coefficients[j];
    }
    tab.rhs[r] = negate ? -rows[r].rhs : rows[r].rhs;
    if (rows[r].sense != RowSense::eq) {
      tab.rows[r][next_slack] = sense == RowSense::le ? 1 : -1;
      if (sense == RowSense::le) {
        tab.basis[r] = next_slack;  // slack starts basic
      }
      ++next_slack;
    }
    if (tab.basis[r] < 0) {
      tab.rows[r][tab.first_artificial + r] = 1;
      tab.basis[r] = tab.first_artificial + r;
    }
  }

  // Phase 1: minimize the artificial sum.
  std::vector<Rational> phase1_cost(tab.total, Rational(0));
  bool need_phase1 = false;
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] >= tab.first_artificial) need_phase1 = true;
  }
  for (int j = tab.first_artificial; j < tab.total; ++j) {
    phase1_cost[j] = 1;
  }
  LpResult result;
  if (need_phase1) {
    const bool bounded = tab.minimize(phase1_cost, true);
    assert(bounded);
    (void)bounded;
    Rational artificial_sum(0);
    for (int r = 0; r < m; ++r) {
      if (tab.basis[r] >= tab.first_artificial) artificial_sum += tab.rhs[r];
    }
    if (artificial_sum != 0) {
      result.status = LpStatus::infeasible;
      return result;
    }
    // Drive remaining degenerate artificials out of the basis.
    for (int r = 0; r < m; ++r) {
      if (tab.basis[r] < tab.first_artificial) continue;
      int col = -1;
      for (int j = 0; j < tab.first_artificial; ++j) {
        if (tab.rows[r][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) tab.pivot(r, col);
      // Otherwise the row is redundant; the artificial stays basic at zero
      // and is excluded from phase 2 entering columns.
    }
  }

  // Phase 2.
  std::vector<Rational> phase2_cost(tab.total, Rational(0));
  for (int j = 0; j < n; ++j) phase2_cost[j] = -objective[j];
  if (!tab.minimize(phase2_cost, false)) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.solution.assign(n, Rational(0));
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) result.solution[tab.basis[r]] = tab.rhs[r];
  }
  result.objective = 0;
  for (int j = 0; j < n; ++j) {
    result.objective += objective[j] * result.solution[j];
  }
  return result;
}

}  // namespace moflow
