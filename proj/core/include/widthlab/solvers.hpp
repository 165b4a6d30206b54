#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/linalg.hpp"
#include "widthlab/vectors.hpp"

namespace widthlab {

enum class RecoveryStatus { optimal, max_iterations, infeasible, tie_detected };

std::string to_string(RecoveryStatus s);

struct RecoveryResult {
  RealVector solution;
  double objective = 0.0;  // ||solution||_p
  double residual = 0.0;   // ||A solution - y||_2
  RecoveryStatus status = RecoveryStatus::infeasible;
  long iterations = 0;
};

// ||Az - y||_2 <= tol_feasibility(y) is the feasibility contract of every
// returned solution with status optimal or tie_detected.
double tol_feasibility(const RealVector& y);

struct IrlsParams {
  double epsilon0 = 1.0;
  double decay = 0.5;
  double epsilon_min = 1e-10;
  int max_outer = 500;
  double stagnation_tol = 1e-6;
};

struct OracleOptions {
  int max_dimension = 20;     // refuse instances with N above this
  double tol_tie = 1e-9;
  long cache_limit = 200000;  // supports; above this, factor on the fly
};

// Exact minimizer of ||z||_1 subject to Az = y via the split-variable LP.
// Status tie_detected when a second optimal vertex with equal objective
// exists along a zero-reduced-cost direction.
RecoveryResult l1_minimize(const MeasurementMatrix& A, const RealVector& y);

// Iteratively reweighted least squares over {Az = y} for 0 < p < 1.
// The reported objective is nonincreasing across outer iterations.
RecoveryResult lp_minimize_irls(const MeasurementMatrix& A, const RealVector& y,
                                double p, const IrlsParams& params = {});

// Global minimizer of ||z||_p over {Az = y} for 0 < p <= 1 by exhaustive
// support enumeration (a minimizer always lives on <= m coordinates; see
// docs/exact_oracle.md). Deterministic lexicographic tie-break.
RecoveryResult lp_minimize_exact(const MeasurementMatrix& A, const RealVector& y,
                                 double p, const OracleOptions& opts = {});

// Support enumeration engine behind lp_minimize_exact, reusable across many
// right-hand sides for the same matrix (factorizations are cached).
class ExactOracle {
 public:
  ExactOracle(const Matrix& A, const OracleOptions& opts = {});
  ~ExactOracle();
  ExactOracle(ExactOracle&&) noexcept;
  ExactOracle& operator=(ExactOracle&&) noexcept;

  RecoveryResult minimize(const RealVector& y, double p) const;

  // Visits every feasible candidate (support, solution, objective) for y.
  using CandidateVisitor =
      std::function<void(const std::vector<int>& support, const RealVector& z, double objective)>;
  RecoveryResult minimize(const RealVector& y, double p, const CandidateVisitor& visit) const;

  long support_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Method {
  enum class Kind { l1, irls, exact };
  Kind kind = Kind::l1;
  double p = 1.0;

  static Method l1() { return {Kind::l1, 1.0}; }
  static Method irls(double p) { return {Kind::irls, p}; }
  static Method exact(double p) { return {Kind::exact, p}; }
  static Method parse(const std::string& name, double p);
  std::string name() const;
};

RecoveryResult reconstruct(const MeasurementMatrix& A, const RealVector& y,
                           const Method& method, const IrlsParams& irls = {},
                           const OracleOptions& oracle = {});

// Adopted stability constant C(delta) = 2(1+rho)/(1-rho), rho =
// sqrt(2) delta/(1-delta); requires delta < sqrt(2)-1.
double stability_constant(double delta);

}  // namespace widthlab
