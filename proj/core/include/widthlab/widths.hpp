#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "widthlab/certify.hpp"
#include "widthlab/linalg.hpp"
#include "widthlab/packing.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/vectors.hpp"

namespace widthlab {

struct RateBand {
  int N = 0, m = 0;
  double p = 1.0, q = 2.0;
  double rate = 0.0;        // min{1, (ln(N/m)+1)/m}^{1/p-1/q}
  double alt_rate = 0.0;    // min{1, ln(eN/m)/m}^{1/p-1/q} (equal analytically)
  double lower_const = 0.0; // c_{p,q}
  double vybiral = 0.0;     // (m+1)^{-(1/p-1/q)}
  // q > 2 display companions: the q=2 upper value and the m^{-1/2} floor scale.
  std::optional<double> upper_q2;
  std::optional<double> sqrt_m_floor;
};

RateBand rate_band(int N, int m, double p, double q);

struct LowerBoundConstants {
  double c = 0.0;    // (1/2)^{2/p-1/q}
  double c1 = 0.0;   // 1/ln 9
  double c2 = 0.0;   // 4
  double d = 0.0;    // 2 c1 p / (4 + c1)
  double c_pq = 0.0; // c * d^{1/p-1/q}
};

LowerBoundConstants lower_bound_constants(double p, double q);

// ceil(max(2s, c1 p s ln(N/(c2 s)))); s here means "recovery of 2s-sparse
// vectors" (see README).
long min_measurements_lp(int s, int N, double p);

// c = 1/(2 ln(2C+3)), C' = 2c/(2 + c ln(4e)); returns ceil(C' p s ln(eN/s)).
long stability_min_measurements(int s, int N, double p, double C);
double stability_rate_constant(double C);  // the C' above

// ceil(C1 s ln(eN/s))
long rip_sample_complexity(int s, int N, double C1);

// Smallest D with D/2 > e and (D/2)/(1+ln(D/2)) > C1 (bisection); the
// m > D ln(eN/m) threshold splits the two upper-bound regimes.
double case_split_constant(double C1);
bool upper_bound_case1(int N, int m, double C1);

struct WidthEstimate {
  double empirical_lower = 0.0;
  std::optional<double> certified_upper;
  RealVector witness;  // kernel vector attaining empirical_lower, ||.||_p = 1
  std::string provenance;
  struct Diagnostics {
    int starts = 0;
    long evaluations = 0;
    int kernel_dimension = 0;
    std::string best_source;          // "basis", "threshold", "coordinate", "ascent"
    double coordinate_candidate = 0.0;  // value of the deterministic
                                        // first-(m+1)-coordinates kernel vector
    bool contradiction_flag = false;  // see replay_contradiction_monitor
  } diag;
};

struct WidthSearchOptions {
  int starts = 64;
  int iterations = 200;
  std::uint64_t seed = 0;
};

// Lower evaluation of sup{ ||v||_q : v in ker A, ||v||_p <= 1 } from
// deterministic candidates plus multi-start projected ascent over the
// kernel coefficients. Always a valid lower bound (max of evaluations).
WidthEstimate empirical_width_lower(const MeasurementMatrix& A, double p, double q,
                                    const WidthSearchOptions& opts = {});

// Upper bound on the same sup, assembled from an exhaustively certified
// delta_{2s}:  2^{1/r} ((1+d)/(1-d))^{1/2} s^{-(1/r-1/q)} C(d)^{1/r} s^{-(1/p-1/r)}
// with r = min{1,q} and C the adopted stability constant (requires
// delta_{2s} < sqrt(2)-1).
WidthEstimate certified_width_upper(const MeasurementMatrix& A, double p, double q,
                                    int s, const RipEstimate& rip);

// Convenience: computes the exhaustive delta_{2s} first (budget applies).
WidthEstimate certified_width_upper(const MeasurementMatrix& A, double p, double q,
                                    int s, const RipOptions& rip_opts = {});

// Consistency monitor: fires only if the whole search stayed below the
// theoretical lower threshold c mu^{1/p-1/q} while the null space property
// of order 2*floor(1/mu) is certified -- which the lower-bound argument
// rules out, so firing flags an implementation bug for manual review.
struct ContradictionReplay {
  bool fired = false;
  bool nsp_certified = false;
  double mu = 0.0;
  double threshold = 0.0;
  int order = 0;
};

ContradictionReplay replay_contradiction_monitor(const MeasurementMatrix& A, double p,
                                                 double q, double found_value,
                                                 const NspOptions& opts = {});

struct SamplerSpec {
  enum class Kind { ball_lp, weak_ball, packing_vectors };
  Kind kind = Kind::ball_lp;
  double p = 1.0;
  const PackingFamily* family = nullptr;  // for packing_vectors
  static SamplerSpec ball(double p) { return {Kind::ball_lp, p, nullptr}; }
  static SamplerSpec weak_ball(double p) { return {Kind::weak_ball, p, nullptr}; }
  static SamplerSpec packing(const PackingFamily& f, double p) {
    return {Kind::packing_vectors, p, &f};
  }
};

struct EmErrorReport {
  double worst_error = 0.0;  // max over samples of ||x - Delta(Ax)||_q
  double mean_error = 0.0;
  double c1 = 0.0;  // K + K subset C1 K   (2^{1/p} for B_p)
  double c2 = 0.0;  // quasi-norm constant of l_q: max{1, 2^{1/q-1}}
  int trials = 0;
  int tie_failures = 0;
  std::string sampler;
};

// Sampled lower estimate of the worst-case reconstruction error over K.
EmErrorReport em_recovery_error(const MeasurementMatrix& A, const Method& method,
                                const SamplerSpec& sampler, double q, int trials,
                                std::uint64_t seed);

}  // namespace widthlab
