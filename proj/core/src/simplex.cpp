#include "widthlab/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace widthlab {

namespace {

using Tableau = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// After this many consecutive degenerate pivots the entering rule falls back
// to Bland's smallest-index choice until the objective moves again. The
// lexicographic ratio test below already rules out cycling; this is a second
// guard that also helps numerically noisy ties.
constexpr int kDegenerateRunLimit = 1000;

// The tableau keeps the artificial identity block alive through both phases:
// its columns hold the current basis inverse, which the lexicographic ratio
// test uses to break degenerate ties canonically (no basis ever repeats).
struct Dictionary {
  Tableau T;               // m x (n + m + 1); last column is the rhs
  RealVector cost;         // n + m reduced costs
  double objective = 0.0;
  std::vector<int> basis;  // basis[i] = variable basic in row i
  int n_struct = 0;        // structural variables; columns >= n_struct are artificial
  int entering_limit = 0;  // columns eligible to enter (phase 1: all, phase 2: n_struct)

  int rows() const { return static_cast<int>(T.rows()); }
  int vars() const { return static_cast<int>(T.cols()) - 1; }
  int rhs_col() const { return vars(); }

  void pivot(int r, int e) {
    T.row(r) /= T(r, e);
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const double f = T(i, e);
      if (f != 0.0) T.row(i) -= f * T.row(r);
    }
    const double ce = cost[e];
    if (ce != 0.0) {
      objective += ce * T(r, rhs_col());
      for (int j = 0; j < vars(); ++j) cost[j] -= ce * T(r, j);
      cost[e] = 0.0;
    }
    basis[r] = e;
  }

  // Lexicographic ratio test over (rhs, basis-inverse columns)/pivot.
  // Returns the blocking row, or -1 when the column is unbounded.
  int ratio_row(int e, double tol_pivot) const {
    const int m = rows();
    int best = -1;
    for (int i = 0; i < m; ++i) {
      if (T(i, e) <= tol_pivot) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      // compare row i against the incumbent lexicographically
      const double a = T(i, e);
      const double b = T(best, e);
      double lhs = T(i, rhs_col()) / a;
      double rhs = T(best, rhs_col()) / b;
      bool decided = false;
      if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(rhs))) {
        decided = true;
      } else {
        for (int k = 0; k < m && !decided; ++k) {
          lhs = T(i, n_struct + k) / a;
          rhs = T(best, n_struct + k) / b;
          if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(rhs))) decided = true;
        }
      }
      if (decided && lhs < rhs) best = i;
      if (!decided && basis[i] < basis[best]) best = i;  // full tie: smallest label
    }
    return best;
  }
};

LpStatus pivot_to_optimality(Dictionary& dict, const LpOptions& opts, long max_pivots,
                             long& pivots) {
  int degenerate_run = 0;
  while (true) {
    if (pivots >= max_pivots) return LpStatus::iteration_limit;

    int entering = -1;
    if (degenerate_run > kDegenerateRunLimit) {
      for (int j = 0; j < dict.entering_limit; ++j) {
        if (dict.cost[j] < -opts.tol_cost) {
          entering = j;
          break;
        }
      }
    } else {
      double most_negative = -opts.tol_cost;
      for (int j = 0; j < dict.entering_limit; ++j) {
        if (dict.cost[j] < most_negative) {
          most_negative = dict.cost[j];
          entering = j;
        }
      }
    }
    if (entering < 0) return LpStatus::optimal;

    const int leaving = dict.ratio_row(entering, opts.tol_pivot);
    if (leaving < 0) return LpStatus::unbounded;

    const double step = dict.T(leaving, dict.rhs_col());
    dict.pivot(leaving, entering);
    ++pivots;
    if (step <= opts.tol_pivot) {
      ++degenerate_run;
    } else {
      degenerate_run = 0;
    }
  }
}

}  // namespace

LpSolution solve_standard_lp(const Eigen::MatrixXd& A, const RealVector& b,
                             const RealVector& c, const LpOptions& opts) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n) {
    throw std::invalid_argument("solve_standard_lp: dimension mismatch");
  }

  LpSolution sol;

  // [A | I | b] with flipped rows so b >= 0; artificial basis start.
  Dictionary dict;
  dict.n_struct = n;
  dict.entering_limit = n;  // artificials never need to enter
  dict.T.resize(m, n + m + 1);
  for (int i = 0; i < m; ++i) {
    const double sign = b[i] < 0.0 ? -1.0 : 1.0;
    dict.T.block(i, 0, 1, n) = sign * A.row(i);
    dict.T.block(i, n, 1, m).setZero();
    dict.T(i, n + i) = 1.0;
    dict.T(i, n + m) = sign * b[i];
  }
  dict.basis.resize(m);
  for (int i = 0; i < m; ++i) dict.basis[i] = n + i;

  // Phase 1: minimize the artificial sum.
  dict.cost = RealVector::Zero(n + m);
  dict.objective = 0.0;
  for (int i = 0; i < m; ++i) {
    dict.objective += dict.T(i, n + m);
    for (int j = 0; j < n; ++j) dict.cost[j] -= dict.T(i, j);
  }

  const LpStatus phase1 = pivot_to_optimality(dict, opts, opts.max_pivots, sol.pivots);
  if (phase1 == LpStatus::iteration_limit) {
    sol.status = LpStatus::iteration_limit;
    return sol;
  }
  const double feas_tol = opts.tol_pivot * (1.0 + b.cwiseAbs().sum());
  if (dict.objective > feas_tol) {
    sol.status = LpStatus::infeasible;
    return sol;
  }

  // Drive remaining artificials out of the basis so later pivots cannot lift
  // them off zero. Rows with no structural pivot are zero rows and stay inert.
  for (int i = 0; i < m; ++i) {
    if (dict.basis[i] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (std::abs(dict.T(i, j)) > opts.tol_pivot) {
        dict.pivot(i, j);
        ++sol.pivots;
        break;
      }
    }
  }

  // Phase 2 on the same tableau; artificial columns stay as the lexicographic
  // reference but are barred from entering. Any artificial still basic sits in
  // a structurally zero row, so a zero phase-2 cost keeps the objective exact.
  dict.cost = RealVector::Zero(n + m);
  dict.cost.head(n) = c;
  dict.objective = 0.0;
  for (int i = 0; i < m; ++i) {
    const int v = dict.basis[i];
    const double cb = v < n ? c[v] : 0.0;
    if (cb != 0.0) {
      dict.objective += cb * dict.T(i, n + m);
      for (int j = 0; j < n + m; ++j) dict.cost[j] -= cb * dict.T(i, j);
    }
  }

  const LpStatus phase2 = pivot_to_optimality(dict, opts, opts.max_pivots, sol.pivots);

  const auto extract = [&] {
    sol.x = RealVector::Zero(n);
    for (int i = 0; i < m; ++i) {
      if (dict.basis[i] < n) sol.x[dict.basis[i]] = dict.T(i, n + m);
    }
    sol.objective = dict.objective;
    sol.basis = dict.basis;
    sol.reduced_costs = dict.cost.head(n);
  };

  if (phase2 != LpStatus::optimal) {
    sol.status = phase2;
    if (phase2 == LpStatus::iteration_limit) extract();  // current feasible point
    return sol;
  }

  sol.status = LpStatus::optimal;
  extract();

  // Alternate-optimum scan: a nonbasic structural column with ~zero reduced
  // cost and a positive blocking step reaches a second optimal vertex.
  std::vector<bool> in_basis(n, false);
  for (int v : dict.basis) {
    if (v < n) in_basis[v] = true;
  }
  const double rhs_peak = m > 0 ? dict.T.col(n + m).cwiseAbs().maxCoeff() : 0.0;
  const double step_tol = opts.tol_pivot * (1.0 + rhs_peak);
  for (int j = 0; j < n && !sol.alternate_optimum; ++j) {
    if (in_basis[j] || dict.cost[j] > opts.tol_tie) continue;
    const int row = dict.ratio_row(j, opts.tol_pivot);
    if (row < 0) {
      sol.alternate_optimum = true;  // zero-cost ray
    } else if (dict.T(row, n + m) > step_tol) {
      sol.alternate_optimum = true;
    }
  }
  return sol;
}

}  // namespace widthlab
