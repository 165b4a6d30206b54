#pragma once

#include <Eigen/Dense>
#include <vector>

#include "widthlab/vectors.hpp"

namespace widthlab {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpOptions {
  double tol_pivot = 1e-9;
  double tol_cost = 1e-9;
  double tol_tie = 1e-9;    // zero-reduced-cost threshold for the tie scan
  long max_pivots = 200000;
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  RealVector x;
  double objective = 0.0;
  long pivots = 0;
  std::vector<int> basis;
  RealVector reduced_costs;
  // True when a nonbasic column with (near-)zero reduced cost admits a
  // positive ratio-test step, i.e. a second optimal vertex exists along a
  // zero-reduced-cost direction.
  bool alternate_optimum = false;
};

// Dense two-phase primal simplex for  min c'x  s.t.  Ax = b, x >= 0.
// Dantzig entering rule with a switch to Bland's rule after a run of
// degenerate pivots, which guarantees termination.
LpSolution solve_standard_lp(const Eigen::MatrixXd& A, const RealVector& b,
                             const RealVector& c, const LpOptions& opts = {});

}  // namespace widthlab
