#include "widthlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "widthlab/combinatorics.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/prng.hpp"
#include "widthlab/simplex.hpp"

namespace widthlab {

std::string to_string(NspMethod m) {
  switch (m) {
    case NspMethod::exact_l1: return "exact-l1";
    case NspMethod::oracle_equivalence: return "oracle-equivalence";
    case NspMethod::heuristic: return "heuristic";
  }
  return "unknown";
}

namespace {

double support_gram_delta(const Matrix& A, const std::vector<int>& support) {
  Matrix As(A.rows(), support.size());
  for (size_t j = 0; j < support.size(); ++j) As.col(j) = A.col(support[j]);
  const Matrix G = As.transpose() * As;
  const auto [lmin, lmax] = symmetric_eig_extremes(G);
  return std::max(lmax - 1.0, 1.0 - lmin);
}

// Best-support mass ratio of a kernel vector: (sum of s largest |v_i|^p)/||v||_p^p,
// together with the attaining support.
std::pair<double, std::vector<int>> worst_support_ratio(const RealVector& v, int s,
                                                        double p) {
  std::vector<int> support = top_support(v, s);
  double top = 0.0;
  double total = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) total += std::pow(std::abs(v[i]), p);
  for (int i : support) top += std::pow(std::abs(v[i]), p);
  return {total > 0.0 ? top / total : 0.0, std::move(support)};
}

}  // namespace

RipEstimate rip_constant(const MeasurementMatrix& M, int s, RipMethod method,
                         const RipOptions& opts) {
  const Matrix& A = M.A;
  const int N = M.cols();
  // delta_s is well-defined for any s <= N (for s > rank A it is >= 1)
  if (s < 1 || s > N) {
    throw std::invalid_argument("rip_constant: need 1 <= s <= N");
  }

  RipEstimate est;
  est.s = s;
  est.method = method;

  if (method == RipMethod::exhaustive) {
    const double total = binomial(N, s);
    if (total > static_cast<double>(opts.max_supports)) {
      throw BudgetExceeded("rip_constant: exhaustive budget C(N,s) exceeded");
    }
    std::vector<int> comb = first_combination(s);
    do {
      const double delta = support_gram_delta(A, comb);
      ++est.supports_examined;
      if (delta > est.delta) {
        est.delta = delta;
        est.witness_support = comb;
      }
    } while (next_combination(comb, N));
    return est;
  }

  CounterRng rng(opts.seed, "rip-sample");
  std::vector<int> scratch(N);
  for (long t = 0; t < opts.samples; ++t) {
    // partial Fisher-Yates draw of s distinct indices
    for (int i = 0; i < N; ++i) scratch[i] = i;
    std::vector<int> support(s);
    for (int i = 0; i < s; ++i) {
      const int j = i + static_cast<int>(rng.below(
                            static_cast<std::uint64_t>(t) * s + i, N - i));
      std::swap(scratch[i], scratch[j]);
      support[i] = scratch[i];
    }
    std::sort(support.begin(), support.end());
    const double delta = support_gram_delta(A, support);
    ++est.supports_examined;
    if (delta > est.delta) {
      est.delta = delta;
      est.witness_support = support;
    }
  }
  return est;
}

namespace {

NspReport nsp_exact_l1(const MeasurementMatrix& M, int s, const NspOptions& opts) {
  const Matrix& A = M.A;
  const int m = M.rows();
  const int N = M.cols();

  NspReport report;
  report.s = s;
  report.p = 1.0;
  report.method = NspMethod::exact_l1;

  const double lp_count = binomial(N, s) * std::pow(2.0, s);
  if (lp_count > static_cast<double>(opts.max_lp_budget)) {
    throw BudgetExceeded("check_nsp: exact-l1 LP budget exceeded");
  }

  // One LP per (S, sigma):  max sum_{i in S} sigma_i v_i  over
  // { v = a - b, a,b >= 0, Av = 0, sum(a+b) + t = 1 }.
  Matrix C(m + 1, 2 * N + 1);
  C.block(0, 0, m, N) = A;
  C.block(0, N, m, N) = -A;
  C.block(0, 2 * N, m, 1).setZero();
  C.row(m).setOnes();
  RealVector rhs = RealVector::Zero(m + 1);
  rhs[m] = 1.0;

  RealVector cost = RealVector::Zero(2 * N + 1);
  std::vector<int> comb = first_combination(s);
  do {
    for (std::uint32_t bits = 0; bits < (1u << s); ++bits) {
      cost.setZero();
      for (int i = 0; i < s; ++i) {
        const double sigma = (bits >> i) & 1 ? -1.0 : 1.0;
        cost[comb[i]] = -sigma;      // maximize => minimize negated
        cost[N + comb[i]] = sigma;
      }
      const LpSolution lp = solve_standard_lp(C, rhs, cost);
      if (lp.status != LpStatus::optimal) {
        throw std::runtime_error("check_nsp: interior LP did not solve");
      }
      ++report.instances_examined;
      const double value = -lp.objective;
      if (value > report.worst_ratio) {
        report.worst_ratio = value;
        NspWitness w;
        w.v = lp.x.head(N) - lp.x.segment(N, N);
        const double norm1 = lp_quasinorm(w.v, 1.0);
        if (norm1 > 0.0) w.v /= norm1;
        w.support.assign(comb.begin(), comb.end());
        w.ratio = value;
        report.witness = std::move(w);
      }
    }
  } while (next_combination(comb, N));

  report.boundary = std::abs(report.worst_ratio - 0.5) <= opts.boundary_tol;
  report.holds = report.worst_ratio < 0.5 && !report.boundary;
  return report;
}

NspReport nsp_oracle_equivalence(const MeasurementMatrix& M, int s, double p,
                                 const NspOptions& opts) {
  const Matrix& A = M.A;
  const int N = M.cols();

  NspReport report;
  report.s = s;
  report.p = p;
  report.method = NspMethod::oracle_equivalence;

  ExactOracle oracle(A, opts.oracle);
  bool any_failure = false;

  std::vector<int> comb = first_combination(s);
  do {
    for (std::uint32_t bits = 0; bits < (1u << s); ++bits) {
      RealVector x = RealVector::Zero(N);
      for (int i = 0; i < s; ++i) x[comb[i]] = ((bits >> i) & 1) ? -1.0 : 1.0;
      const RealVector y = A * x;
      ++report.instances_examined;

      // Every feasible candidate z yields the kernel vector v = x - z;
      // ratios are taken against the best support for v.
      const auto visit = [&](const std::vector<int>&, const RealVector& z, double) {
        const RealVector v = x - z;
        if (v.cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + x.cwiseAbs().maxCoeff())) return;
        auto [ratio, support] = worst_support_ratio(v, s, p);
        if (ratio > report.worst_ratio) {
          report.worst_ratio = ratio;
          report.witness = NspWitness{v, std::move(support), ratio};
        }
      };
      const RecoveryResult res = oracle.minimize(y, p, visit);
      const bool recovered =
          res.status == RecoveryStatus::optimal &&
          (res.solution - x).cwiseAbs().maxCoeff() <= 1e-8 * (1.0 + x.cwiseAbs().maxCoeff());
      if (!recovered) any_failure = true;
    }
  } while (next_combination(comb, N));

  report.boundary = std::abs(report.worst_ratio - 0.5) <= opts.boundary_tol;
  report.holds = !any_failure && report.worst_ratio < 0.5 && !report.boundary;
  return report;
}

NspReport nsp_heuristic(const MeasurementMatrix& M, int s, double p,
                        const NspOptions& opts) {
  NspReport report;
  report.s = s;
  report.p = p;
  report.method = NspMethod::heuristic;
  report.refutation_only = true;

  const KernelBasis kernel = kernel_basis(M);
  const int k = kernel.dimension();
  const int N = M.cols();
  if (k == 0) {
    report.holds = true;  // no nonzero kernel vector exists
    report.refutation_only = false;
    return report;
  }

  constexpr double kSmooth = 1e-9;
  CounterRng rng(opts.seed, "nsp-heuristic");

  const auto record = [&](const RealVector& v) {
    auto [ratio, support] = worst_support_ratio(v, s, p);
    ++report.instances_examined;
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      RealVector scaled = v;
      const double norm = lp_quasinorm(scaled, p);
      if (norm > 0.0) scaled /= norm;
      report.witness = NspWitness{std::move(scaled), std::move(support), ratio};
    }
  };

  const int total_starts = opts.heuristic_starts + k;
  for (int start = 0; start < total_starts; ++start) {
    RealVector c(k);
    if (start < k) {
      c.setZero();
      c[start] = 1.0;  // deterministic starts at the basis directions
    } else {
      for (int i = 0; i < k; ++i) {
        c[i] = rng.gaussian(static_cast<std::uint64_t>(start) * k + i);
      }
    }
    if (c.norm() == 0.0) continue;
    c.normalize();

    double step = 0.25;
    RealVector v = kernel.V * c;
    record(v);
    double current = worst_support_ratio(v, s, p).first;

    for (int it = 0; it < opts.heuristic_iterations && step > 1e-8; ++it) {
      // gradient of the smoothed ratio (sum_T w_i)/(sum w_i),
      // w_i = (v_i^2 + eps^2)^{p/2}
      std::vector<int> top = top_support(v, s);
      std::vector<bool> in_top(N, false);
      for (int i : top) in_top[i] = true;
      double mass_top = 0.0, mass_all = 0.0;
      RealVector w(N), dw(N);
      for (int i = 0; i < N; ++i) {
        const double base = v[i] * v[i] + kSmooth * kSmooth;
        w[i] = std::pow(base, p / 2.0);
        dw[i] = p * v[i] * std::pow(base, p / 2.0 - 1.0);
        mass_all += w[i];
        if (in_top[i]) mass_top += w[i];
      }
      RealVector grad_v(N);
      for (int i = 0; i < N; ++i) {
        const double indicator = in_top[i] ? 1.0 : 0.0;
        grad_v[i] = dw[i] * (indicator * mass_all - mass_top) / (mass_all * mass_all);
      }
      RealVector grad_c = kernel.V.transpose() * grad_v;
      const double gnorm = grad_c.norm();
      if (gnorm < 1e-14) break;

      RealVector c_next = c + (step / gnorm) * grad_c;
      c_next.normalize();
      const RealVector v_next = kernel.V * c_next;
      const double ratio_next = worst_support_ratio(v_next, s, p).first;
      if (ratio_next > current) {
        c = c_next;
        v = v_next;
        current = ratio_next;
        record(v);
      } else {
        step *= 0.5;
      }
    }
  }

  report.boundary = std::abs(report.worst_ratio - 0.5) <= opts.boundary_tol;
  report.holds = report.worst_ratio < 0.5 && !report.boundary;
  return report;
}

}  // namespace

NspReport check_nsp(const MeasurementMatrix& A, int s, double p, NspMethod method,
                    const NspOptions& opts) {
  require_exponent(p, /*allow_infinity=*/false);
  if (p > 1.0) throw std::invalid_argument("check_nsp: requires p <= 1");
  if (s < 1 || s > A.cols()) throw std::invalid_argument("check_nsp: need 1 <= s <= N");

  switch (method) {
    case NspMethod::exact_l1:
      if (p != 1.0) throw std::invalid_argument("check_nsp: exact-l1 requires p = 1");
      return nsp_exact_l1(A, s, opts);
    case NspMethod::oracle_equivalence:
      return nsp_oracle_equivalence(A, s, p, opts);
    case NspMethod::heuristic:
      return nsp_heuristic(A, s, p, opts);
  }
  throw std::logic_error("check_nsp: unreachable");
}

QuotientNormResult quotient_norm(const MeasurementMatrix& A, const RealVector& x,
                                 double p, const OracleOptions& opts) {
  require_exponent(p, /*allow_infinity=*/false);
  if (p > 1.0) throw std::invalid_argument("quotient_norm: requires p <= 1");
  const RealVector y = A.A * x;
  const RecoveryResult res =
      p == 1.0 ? l1_minimize(A, y) : lp_minimize_exact(A, y, p, opts);
  if (res.status == RecoveryStatus::infeasible) {
    throw std::logic_error("quotient_norm: Ax must be reachable");
  }
  return {res.objective, res.solution};
}

PreservationReport norm_preservation_check(const MeasurementMatrix& A,
                                           const PackingFamily& family, double p,
                                           const OracleOptions& opts) {
  PreservationReport report;
  const int n = static_cast<int>(family.sets.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const RealVector xi =
          packing_vector(family.sets[i], family.s, p, family.N);
      const RealVector xj =
          packing_vector(family.sets[j], family.s, p, family.N);
      const RealVector d = xi - xj;
      PreservationPair pair;
      pair.i = i;
      pair.j = j;
      pair.direct_norm = lp_quasinorm(d, p);
      pair.quotient = quotient_norm(A, d, p, opts).value;
      pair.preserved = std::abs(pair.quotient - pair.direct_norm) <= 1e-8;
      pair.separated = std::pow(pair.direct_norm, p) > 1.0;
      report.all_preserved = report.all_preserved && pair.preserved;
      report.all_separated = report.all_separated && pair.separated;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

}  // namespace widthlab
