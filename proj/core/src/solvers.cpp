#include "widthlab/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "widthlab/errors.hpp"
#include "widthlab/simplex.hpp"

namespace widthlab {

std::string to_string(RecoveryStatus s) {
  switch (s) {
    case RecoveryStatus::optimal: return "optimal";
    case RecoveryStatus::max_iterations: return "max-iterations";
    case RecoveryStatus::infeasible: return "infeasible";
    case RecoveryStatus::tie_detected: return "tie-detected";
  }
  return "unknown";
}

double tol_feasibility(const RealVector& y) { return 1e-8 * (1.0 + y.norm()); }

namespace {

bool right_hand_side_reachable(const Matrix& A, const RealVector& y) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A);
  const RealVector z = cod.solve(y);
  return (A * z - y).norm() <= tol_feasibility(y);
}

}  // namespace

RecoveryResult l1_minimize(const MeasurementMatrix& M, const RealVector& y) {
  const Matrix& A = M.A;
  const int m = M.rows();
  const int N = M.cols();
  if (y.size() != m) throw std::invalid_argument("l1_minimize: rhs size mismatch");
  if (!y.allFinite()) throw std::invalid_argument("l1_minimize: rhs must be finite");

  RecoveryResult out;
  out.solution = RealVector::Zero(N);  // placeholder on failure paths
  out.residual = y.norm();
  if (!right_hand_side_reachable(A, y)) {
    out.status = RecoveryStatus::infeasible;
    return out;
  }

  // Split z = u - v, u,v >= 0: min 1'(u+v) s.t. [A -A][u;v] = y.
  Matrix S(m, 2 * N);
  S.leftCols(N) = A;
  S.rightCols(N) = -A;
  const RealVector c = RealVector::Ones(2 * N);

  const LpSolution lp = solve_standard_lp(S, y, c);
  out.iterations = lp.pivots;
  switch (lp.status) {
    case LpStatus::infeasible:
      out.status = RecoveryStatus::infeasible;
      return out;
    case LpStatus::iteration_limit:
      out.status = RecoveryStatus::max_iterations;
      if (lp.x.size() == 2 * N) {
        // current feasible (but unproven) vertex
        out.solution = lp.x.head(N) - lp.x.tail(N);
        out.objective = lp_quasinorm(out.solution, 1.0);
        out.residual = (A * out.solution - y).norm();
      }
      return out;
    case LpStatus::unbounded:
      throw std::logic_error("l1_minimize: LP cannot be unbounded");
    case LpStatus::optimal:
      break;
  }

  out.solution = lp.x.head(N) - lp.x.tail(N);
  out.objective = lp_quasinorm(out.solution, 1.0);
  out.residual = (A * out.solution - y).norm();
  out.status = lp.alternate_optimum ? RecoveryStatus::tie_detected
                                    : RecoveryStatus::optimal;
  return out;
}

RecoveryResult lp_minimize_irls(const MeasurementMatrix& M, const RealVector& y,
                                double p, const IrlsParams& params) {
  const Matrix& A = M.A;
  const int m = M.rows();
  const int N = M.cols();
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("lp_minimize_irls: 0 < p < 1");
  if (y.size() != m) throw std::invalid_argument("lp_minimize_irls: rhs size mismatch");
  if (!(params.epsilon0 > params.epsilon_min && params.epsilon_min > 0.0) ||
      !(params.decay > 0.0 && params.decay < 1.0)) {
    throw std::invalid_argument("lp_minimize_irls: bad epsilon schedule");
  }

  RecoveryResult out;
  out.solution = RealVector::Zero(N);  // placeholder on failure paths
  out.residual = y.norm();
  const double feas = tol_feasibility(y);

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(A);
  RealVector z = cod.solve(y);
  if ((A * z - y).norm() > feas) {
    out.status = RecoveryStatus::infeasible;
    return out;
  }

  // Unique feasible point: nothing to iterate over.
  if (static_cast<int>(cod.rank()) == N) {
    out.solution = z;
    out.objective = lp_quasinorm(z, p);
    out.residual = (A * z - y).norm();
    out.status = RecoveryStatus::optimal;
    out.iterations = 1;
    return out;
  }

  double eps = params.epsilon0;
  double objective = lp_quasinorm(z, p);
  bool converged = false;
  int iter = 0;
  for (; iter < params.max_outer; ++iter) {
    // Weighted minimum-norm step: weights (z_i^2 + eps^2)^{p/2-1}, so the
    // inverse-weight diagonal is (z_i^2 + eps^2)^{1-p/2}.
    RealVector dinv(N);
    for (int i = 0; i < N; ++i) {
      dinv[i] = std::pow(z[i] * z[i] + eps * eps, 1.0 - p / 2.0);
    }
    const Matrix ADA = A * dinv.asDiagonal() * A.transpose();
    RealVector u;
    Eigen::LDLT<Matrix> ldlt(ADA);
    bool ok = ldlt.info() == Eigen::Success;
    if (ok) {
      u = ldlt.solve(y);
      ok = u.allFinite() && (ADA * u - y).norm() <= feas;
    }
    if (!ok) {
      Eigen::CompleteOrthogonalDecomposition<Matrix> fallback(ADA);
      u = fallback.solve(y);
    }
    RealVector z_next = dinv.asDiagonal() * (A.transpose() * u);
    const double objective_next = lp_quasinorm(z_next, p);

    const bool acceptable = objective_next <= objective + 1e-12 * (1.0 + objective) &&
                            (A * z_next - y).norm() <= feas;
    double rel_change = 1.0;
    if (acceptable) {
      rel_change = std::abs(objective - objective_next) / std::max(objective, 1e-300);
      z = std::move(z_next);
      objective = objective_next;
    }

    if (!acceptable || rel_change < params.stagnation_tol) {
      if (eps <= params.epsilon_min) {
        converged = true;
        ++iter;
        break;
      }
      eps = std::max(eps * params.decay, params.epsilon_min);
    }
  }

  out.solution = z;
  out.objective = objective;
  out.residual = (A * z - y).norm();
  out.iterations = iter;
  out.status = converged ? RecoveryStatus::optimal : RecoveryStatus::max_iterations;
  return out;
}

// ---------------------------------------------------------------------------
// Exact oracle
// ---------------------------------------------------------------------------

struct ExactOracle::Impl {
  Matrix A;
  OracleOptions opts;
  std::vector<std::vector<int>> supports;  // sizes ascending, lex within size
  // cached factorizations, parallel to `supports` (empty if above cache cap)
  std::vector<Eigen::CompleteOrthogonalDecomposition<Matrix>> cods;
  bool cached = false;

  Impl(const Matrix& a, const OracleOptions& o) : A(a), opts(o) {
    const int N = static_cast<int>(A.cols());
    const int m = static_cast<int>(A.rows());
    if (N > opts.max_dimension) {
      throw OversizeError("exact oracle: N exceeds the dimension cap");
    }
    const int kmax = std::min(m, N);
    std::vector<int> comb;
    for (int k = 1; k <= kmax; ++k) {
      comb.resize(k);
      for (int i = 0; i < k; ++i) comb[i] = i;
      while (true) {
        supports.push_back(comb);
        int i = k - 1;
        while (i >= 0 && comb[i] == N - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    cached = static_cast<long>(supports.size()) <= opts.cache_limit;
    if (cached) {
      cods.reserve(supports.size());
      for (const auto& s : supports) cods.emplace_back(gather(s));
    }
  }

  Matrix gather(const std::vector<int>& support) const {
    Matrix As(A.rows(), support.size());
    for (size_t j = 0; j < support.size(); ++j) As.col(j) = A.col(support[j]);
    return As;
  }
};

ExactOracle::ExactOracle(const Matrix& A, const OracleOptions& opts)
    : impl_(std::make_unique<Impl>(A, opts)) {}
ExactOracle::~ExactOracle() = default;
ExactOracle::ExactOracle(ExactOracle&&) noexcept = default;
ExactOracle& ExactOracle::operator=(ExactOracle&&) noexcept = default;

long ExactOracle::support_count() const {
  return static_cast<long>(impl_->supports.size());
}

RecoveryResult ExactOracle::minimize(const RealVector& y, double p) const {
  return minimize(y, p, CandidateVisitor{});
}

RecoveryResult ExactOracle::minimize(const RealVector& y, double p,
                                     const CandidateVisitor& visit) const {
  require_exponent(p, /*allow_infinity=*/false);
  if (p > 1.0) throw std::invalid_argument("exact oracle: requires p <= 1");
  const Matrix& A = impl_->A;
  const int N = static_cast<int>(A.cols());
  if (y.size() != A.rows()) throw std::invalid_argument("exact oracle: rhs size mismatch");

  const double feas = tol_feasibility(y);
  RecoveryResult out;
  bool found = false;
  double best_obj = std::numeric_limits<double>::infinity();
  RealVector best_z;
  std::vector<int> best_support;
  bool tie = false;

  const auto consider = [&](const std::vector<int>& support, const RealVector& z) {
    const double obj = lp_quasinorm(z, p);
    if (visit) visit(support, z, obj);

    if (!found || obj < best_obj - impl_->opts.tol_tie) {
      found = true;
      best_obj = obj;
      best_z = z;
      best_support = support;
      tie = false;
      return;
    }
    if (std::abs(obj - best_obj) <= impl_->opts.tol_tie) {
      const double gap = (z - best_z).cwiseAbs().maxCoeff();
      if (gap > 1e-8 * (1.0 + best_z.cwiseAbs().maxCoeff())) {
        // distinct minimizer with (numerically) equal objective
        tie = true;
        if (obj < best_obj ||
            std::lexicographical_compare(support.begin(), support.end(),
                                         best_support.begin(), best_support.end())) {
          best_obj = std::min(best_obj, obj);
          best_z = z;
          best_support = support;
        }
      } else if (obj < best_obj) {
        best_obj = obj;  // same vector, slightly better objective estimate
      }
    }
  };

  // empty support: z = 0 is feasible iff y ~ 0
  if (y.norm() <= feas) consider({}, RealVector::Zero(N));

  RealVector z(N);
  for (size_t idx = 0; idx < impl_->supports.size(); ++idx) {
    const auto& support = impl_->supports[idx];
    RealVector coeff;
    double residual;
    if (impl_->cached) {
      coeff = impl_->cods[idx].solve(y);
      residual = (impl_->gather(support) * coeff - y).norm();
    } else {
      const Matrix As = impl_->gather(support);
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(As);
      coeff = cod.solve(y);
      residual = (As * coeff - y).norm();
    }
    if (residual > feas) continue;

    z.setZero();
    for (size_t j = 0; j < support.size(); ++j) z[support[j]] = coeff[j];
    consider(support, z);
  }

  out.iterations = static_cast<long>(impl_->supports.size()) + 1;
  if (!found) {
    out.status = RecoveryStatus::infeasible;
    out.solution = RealVector::Zero(N);
    out.residual = y.norm();
    return out;
  }
  out.solution = best_z;
  out.objective = best_obj;
  out.residual = (A * best_z - y).norm();
  out.status = tie ? RecoveryStatus::tie_detected : RecoveryStatus::optimal;
  return out;
}

RecoveryResult lp_minimize_exact(const MeasurementMatrix& A, const RealVector& y,
                                 double p, const OracleOptions& opts) {
  return ExactOracle(A.A, opts).minimize(y, p);
}

Method Method::parse(const std::string& name, double p) {
  if (name == "l1") return l1();
  if (name == "irls") return irls(p);
  if (name == "exact") return exact(p);
  throw ConfigError("unknown method: " + name);
}

std::string Method::name() const {
  switch (kind) {
    case Kind::l1: return "l1";
    case Kind::irls: return "irls";
    case Kind::exact: return "exact";
  }
  return "unknown";
}

RecoveryResult reconstruct(const MeasurementMatrix& A, const RealVector& y,
                           const Method& method, const IrlsParams& irls,
                           const OracleOptions& oracle) {
  switch (method.kind) {
    case Method::Kind::l1: return l1_minimize(A, y);
    case Method::Kind::irls: return lp_minimize_irls(A, y, method.p, irls);
    case Method::Kind::exact:
      return lp_minimize_exact(A, y, method.p, oracle);
  }
  throw std::logic_error("reconstruct: unreachable");
}

double stability_constant(double delta) {
  if (!(delta >= 0.0) || delta >= std::sqrt(2.0) - 1.0) {
    throw std::invalid_argument("stability_constant: requires 0 <= delta < sqrt(2)-1");
  }
  const double rho = std::sqrt(2.0) * delta / (1.0 - delta);
  return 2.0 * (1.0 + rho) / (1.0 - rho);
}

}  // namespace widthlab
