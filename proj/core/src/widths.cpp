#include "widthlab/widths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "widthlab/errors.hpp"
#include "widthlab/prng.hpp"

namespace widthlab {

namespace {
constexpr double kE = std::numbers::e;
}

RateBand rate_band(int N, int m, double p, double q) {
  require_width_pair(p, q);
  if (!(m >= 1 && m < N)) throw std::invalid_argument("rate_band: need 1 <= m < N");

  RateBand band;
  band.N = N;
  band.m = m;
  band.p = p;
  band.q = q;
  const double expo = 1.0 / p - 1.0 / q;
  band.rate = std::pow(std::min(1.0, (std::log(double(N) / m) + 1.0) / m), expo);
  band.alt_rate = std::pow(std::min(1.0, std::log(kE * N / m) / m), expo);
  band.lower_const = lower_bound_constants(p, q).c_pq;
  band.vybiral = std::pow(m + 1.0, -expo);
  if (q > 2.0) {
    const double e2 = 1.0 / p - 0.5;
    band.upper_q2 = std::pow(std::min(1.0, (std::log(double(N) / m) + 1.0) / m), e2);
    band.sqrt_m_floor = std::pow(static_cast<double>(m), -0.5);
  }
  return band;
}

LowerBoundConstants lower_bound_constants(double p, double q) {
  require_width_pair(p, q);
  LowerBoundConstants k;
  k.c1 = 1.0 / std::log(9.0);
  k.c2 = 4.0;
  k.c = std::pow(0.5, 2.0 / p - 1.0 / q);
  k.d = 2.0 * k.c1 * p / (4.0 + k.c1);
  k.c_pq = k.c * std::pow(k.d, 1.0 / p - 1.0 / q);
  return k;
}

long min_measurements_lp(int s, int N, double p) {
  require_exponent(p, false);
  if (p > 1.0) throw std::invalid_argument("min_measurements_lp: requires p <= 1");
  if (!(s >= 1 && 2 * s < N)) {
    throw std::invalid_argument("min_measurements_lp: need 1 <= s < N/2");
  }
  const double c1 = 1.0 / std::log(9.0);
  const double c2 = 4.0;
  const double lhs = c1 * p * s * std::log(static_cast<double>(N) / (c2 * s));
  return static_cast<long>(std::ceil(std::max(2.0 * s, lhs)));
}

double stability_rate_constant(double C) {
  if (!(C > 0.0)) throw std::invalid_argument("stability_rate_constant: C > 0");
  const double c = 1.0 / (2.0 * std::log(2.0 * C + 3.0));
  return 2.0 * c / (2.0 + c * std::log(4.0 * kE));
}

long stability_min_measurements(int s, int N, double p, double C) {
  require_exponent(p, false);
  if (s < 1 || s >= N) throw std::invalid_argument("stability_min_measurements: 1 <= s < N");
  const double Cp = stability_rate_constant(C);
  return static_cast<long>(std::ceil(Cp * p * s * std::log(kE * N / s)));
}

long rip_sample_complexity(int s, int N, double C1) {
  if (s < 1 || N < 1 || s > N) throw std::invalid_argument("rip_sample_complexity: bad s,N");
  if (!(C1 > 0.0)) throw std::invalid_argument("rip_sample_complexity: C1 > 0");
  return static_cast<long>(std::ceil(C1 * s * std::log(kE * N / s)));
}

double case_split_constant(double C1) {
  if (!(C1 > 0.0)) throw std::invalid_argument("case_split_constant: C1 > 0");
  // x/(1+ln x) is increasing for x > 1; find the smallest x = D/2 > e with
  // x/(1+ln x) > C1, then pad by one part in 1e6 to keep the inequality strict.
  const auto f = [](double x) { return x / (1.0 + std::log(x)); };
  double lo = kE;
  if (f(lo) > C1) return 2.0 * lo * (1.0 + 1e-6);
  double hi = lo;
  while (f(hi) <= C1) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= C1 ? lo : hi) = mid;
  }
  return 2.0 * hi * (1.0 + 1e-6);
}

bool upper_bound_case1(int N, int m, double C1) {
  const double D = case_split_constant(C1);
  return m > D * std::log(kE * N / m);
}

namespace {

struct Candidate {
  double value = -1.0;
  RealVector v;
  std::string source;
};

void consider(Candidate& best, const RealVector& v, double p, double q,
              const std::string& source, long& evaluations) {
  ++evaluations;
  const double np = lp_quasinorm(v, p);
  if (np <= 0.0) return;
  const double value = lp_quasinorm(v, q) / np;
  if (value > best.value) {
    best.value = value;
    best.v = v / np;
    best.source = source;
  }
}

}  // namespace

WidthEstimate empirical_width_lower(const MeasurementMatrix& M, double p, double q,
                                    const WidthSearchOptions& opts) {
  require_width_pair(p, q);
  const int N = M.cols();
  const int m = M.rows();

  const KernelBasis kernel = kernel_basis(M);
  const int k = kernel.dimension();
  if (k == 0) throw std::invalid_argument("empirical_width_lower: trivial kernel");

  WidthEstimate est;
  est.provenance = M.provenance;
  est.diag.kernel_dimension = k;
  Candidate best;
  long evaluations = 0;

  // Deterministic candidates: kernel basis vectors and their re-projected
  // hard thresholdings (spiky kernel directions).
  for (int j = 0; j < k; ++j) {
    const RealVector v = kernel.V.col(j);
    consider(best, v, p, q, "basis", evaluations);
    for (int s = 1; s <= std::min(8, N); s *= 2) {
      const RealVector proj = kernel.V * (kernel.V.transpose() * hard_threshold(v, s));
      consider(best, proj, p, q, "threshold", evaluations);
    }
  }

  // Kernel vector supported on the first min(m+1, N) coordinates; it exists
  // because m+1 columns cannot be independent in R^m, and it realizes the
  // (m+1)^{-(1/p-1/q)} floor.
  {
    const int width = std::min(m + 1, N);
    const KernelBasis head = kernel_basis(Matrix(M.A.leftCols(width)));
    if (head.dimension() > 0) {
      RealVector v = RealVector::Zero(N);
      v.head(width) = head.V.col(0);
      consider(best, v, p, q, "coordinate", evaluations);
      const double np = lp_quasinorm(v, p);
      if (np > 0.0) est.diag.coordinate_candidate = lp_quasinorm(v, q) / np;
    }
  }

  // Multi-start projected ascent of ||Kc||_q / ||Kc||_p over coefficients.
  CounterRng rng(opts.seed, "width-ascent");
  constexpr double kSmooth = 1e-12;
  for (int start = 0; start < opts.starts; ++start) {
    RealVector c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = rng.gaussian(static_cast<std::uint64_t>(start) * k + i);
    }
    if (c.norm() == 0.0) continue;
    c.normalize();
    RealVector v = kernel.V * c;
    double current = 0.0;
    {
      const double np = lp_quasinorm(v, p);
      current = np > 0.0 ? lp_quasinorm(v, q) / np : 0.0;
    }
    consider(best, v, p, q, "ascent", evaluations);

    double step = 0.5;
    for (int it = 0; it < opts.iterations && step > 1e-9; ++it) {
      // gradient of log(||v||_q) - log(||v||_p) with smoothed powers
      const double nq = lp_quasinorm(v, q);
      const double np = lp_quasinorm(v, p);
      if (nq <= 0.0 || np <= 0.0) break;
      RealVector grad_v(N);
      for (int i = 0; i < N; ++i) {
        const double base = v[i] * v[i] + kSmooth;
        const double gq = v[i] * std::pow(base, q / 2.0 - 1.0) / std::pow(nq, q);
        const double gp = v[i] * std::pow(base, p / 2.0 - 1.0) / std::pow(np, p);
        grad_v[i] = gq - gp;
      }
      RealVector grad_c = kernel.V.transpose() * grad_v;
      const double gnorm = grad_c.norm();
      if (gnorm < 1e-14) break;
      RealVector c_next = c + (step / gnorm) * grad_c;
      c_next.normalize();
      const RealVector v_next = kernel.V * c_next;
      const double np_next = lp_quasinorm(v_next, p);
      const double value_next = np_next > 0.0 ? lp_quasinorm(v_next, q) / np_next : 0.0;
      if (value_next > current) {
        c = c_next;
        v = v_next;
        current = value_next;
        consider(best, v, p, q, "ascent", evaluations);
      } else {
        step *= 0.5;
      }
    }
  }

  est.empirical_lower = best.value;
  est.witness = best.v;
  est.diag.starts = opts.starts;
  est.diag.evaluations = evaluations;
  est.diag.best_source = best.source;
  return est;
}

WidthEstimate certified_width_upper(const MeasurementMatrix& M, double p, double q,
                                    int s, const RipEstimate& rip) {
  require_width_pair(p, q);
  if (q > 2.0) throw std::invalid_argument("certified_width_upper: requires q <= 2");
  if (s < 1) throw std::invalid_argument("certified_width_upper: s >= 1");
  if (rip.method != RipMethod::exhaustive || rip.s != 2 * s) {
    throw std::invalid_argument("certified_width_upper: exhaustive delta_{2s} required");
  }
  if (kernel_basis(M).dimension() == 0) {
    throw std::invalid_argument("certified_width_upper: trivial kernel");
  }
  const double delta = rip.delta;
  if (!(delta < std::sqrt(2.0) - 1.0)) {
    throw std::invalid_argument("certified_width_upper: delta_{2s} too large");
  }

  const double r = std::min(1.0, q);
  // shell-decomposition factor * stability factor * tail-tradeoff factor
  const double shell = std::pow(2.0, 1.0 / r) * std::sqrt((1.0 + delta) / (1.0 - delta)) *
                       std::pow(static_cast<double>(s), -(1.0 / r - 1.0 / q));
  const double stability = std::pow(stability_constant(delta), 1.0 / r);
  const double tail = std::pow(static_cast<double>(s), -(1.0 / p - 1.0 / r));

  WidthEstimate est;
  est.provenance = M.provenance;
  est.certified_upper = shell * stability * tail;
  return est;
}

WidthEstimate certified_width_upper(const MeasurementMatrix& M, double p, double q,
                                    int s, const RipOptions& rip_opts) {
  const RipEstimate rip = rip_constant(M, 2 * s, RipMethod::exhaustive, rip_opts);
  return certified_width_upper(M, p, q, s, rip);
}

ContradictionReplay replay_contradiction_monitor(const MeasurementMatrix& A, double p,
                                                 double q, double found_value,
                                                 const NspOptions& opts) {
  require_width_pair(p, q);
  const int N = A.cols();
  const int m = A.rows();

  ContradictionReplay out;
  const LowerBoundConstants k = lower_bound_constants(p, q);
  out.mu = std::min(1.0, k.d * std::log(kE * N / m) / m);
  out.threshold = k.c * std::pow(out.mu, 1.0 / p - 1.0 / q);
  out.order = 2 * static_cast<int>(std::floor(1.0 / out.mu));
  if (found_value >= out.threshold || out.order < 1 || out.order > N) return out;

  const NspMethod method = p == 1.0 ? NspMethod::exact_l1 : NspMethod::oracle_equivalence;
  try {
    const NspReport nsp = check_nsp(A, out.order, p, method, opts);
    out.nsp_certified = nsp.holds;
    out.fired = nsp.holds;
  } catch (const BudgetExceeded&) {
    // undecidable within budget: never fire
  } catch (const OversizeError&) {
  }
  return out;
}

EmErrorReport em_recovery_error(const MeasurementMatrix& M, const Method& method,
                                const SamplerSpec& sampler, double q, int trials,
                                std::uint64_t seed) {
  require_exponent(q);
  const int N = M.cols();

  EmErrorReport report;
  report.c1 = std::pow(2.0, 1.0 / sampler.p);
  report.c2 = std::max(1.0, std::pow(2.0, 1.0 / q - 1.0));
  CounterRng rng(seed, "em-sampler");

  int count = trials;
  if (sampler.kind == SamplerSpec::Kind::packing_vectors) {
    if (sampler.family == nullptr) {
      throw std::invalid_argument("em_recovery_error: packing sampler needs a family");
    }
    count = std::min<int>(trials, static_cast<int>(sampler.family->sets.size()));
  }

  double sum = 0.0;
  for (int t = 0; t < count; ++t) {
    RealVector x;
    switch (sampler.kind) {
      case SamplerSpec::Kind::ball_lp: {
        RealVector g(N);
        for (int i = 0; i < N; ++i) {
          g[i] = rng.gaussian(static_cast<std::uint64_t>(t) * (N + 1) + i);
        }
        const double radius = rng.uniform01(static_cast<std::uint64_t>(t) * (N + 1) + N);
        const double norm = lp_quasinorm(g, sampler.p);
        x = norm > 0.0 ? RealVector((radius / norm) * g) : RealVector::Zero(N);
        break;
      }
      case SamplerSpec::Kind::weak_ball:
        x = compressible_model_vector(N, sampler.p, derive_seed({seed, static_cast<std::uint64_t>(t)}));
        break;
      case SamplerSpec::Kind::packing_vectors:
        x = packing_vector(sampler.family->sets[t], sampler.family->s, sampler.p,
                           sampler.family->N);
        break;
    }
    const RecoveryResult res = reconstruct(M, M.A * x, method);
    double err;
    if (res.status == RecoveryStatus::infeasible) {
      err = std::numeric_limits<double>::infinity();
    } else {
      err = lp_quasinorm(x - res.solution, q);
      if (res.status == RecoveryStatus::tie_detected) ++report.tie_failures;
    }
    report.worst_error = std::max(report.worst_error, err);
    sum += err;
  }
  report.trials = count;
  report.mean_error = count > 0 ? sum / count : 0.0;
  switch (sampler.kind) {
    case SamplerSpec::Kind::ball_lp: report.sampler = "ball-lp"; break;
    case SamplerSpec::Kind::weak_ball: report.sampler = "weak-ball"; break;
    case SamplerSpec::Kind::packing_vectors: report.sampler = "packing-vectors"; break;
  }
  return report;
}

}  // namespace widthlab
