#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/linalg.hpp"
#include "widthlab/packing.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/vectors.hpp"

namespace widthlab {

enum class RipMethod { exhaustive, sampled };

struct RipOptions {
  long max_supports = 2'000'000;  // exhaustive budget on C(N,s)
  long samples = 1000;            // sampled method draws
  std::uint64_t seed = 0;
};

struct RipEstimate {
  int s = 0;
  double delta = 0.0;
  std::vector<int> witness_support;  // extremal support
  RipMethod method = RipMethod::exhaustive;
  long supports_examined = 0;
};

// delta_s = max over supports S of max(lmax(A_S'A_S)-1, 1-lmin(A_S'A_S)).
// The sampled method reports a lower bound from a seeded support sample.
RipEstimate rip_constant(const MeasurementMatrix& A, int s, RipMethod method,
                         const RipOptions& opts = {});

enum class NspMethod { exact_l1, oracle_equivalence, heuristic };

std::string to_string(NspMethod m);

struct NspOptions {
  long max_lp_budget = 100000;  // exact-l1: C(N,s)*2^s linear programs
  int heuristic_starts = 64;
  int heuristic_iterations = 300;
  std::uint64_t seed = 0;
  double boundary_tol = 1e-10;
  OracleOptions oracle;
};

struct NspWitness {
  RealVector v;              // kernel vector attaining the worst ratio
  std::vector<int> support;  // the offending S
  double ratio = 0.0;        // ||v_S||_p^p / ||v||_p^p
};

struct NspReport {
  int s = 0;
  double p = 1.0;
  NspMethod method = NspMethod::exact_l1;
  bool holds = false;
  double worst_ratio = 0.0;
  bool boundary = false;  // worst ratio within boundary_tol of 1/2
  std::optional<NspWitness> witness;
  long instances_examined = 0;
  // Under the heuristic, holds=true only means "no violation found".
  bool refutation_only = false;
};

// Null space property of order s at level p: every nonzero kernel vector
// puts strictly less than half of its ||.||_p^p mass on any s coordinates.
NspReport check_nsp(const MeasurementMatrix& A, int s, double p, NspMethod method,
                    const NspOptions& opts = {});

struct QuotientNormResult {
  double value = 0.0;
  RealVector representative;  // w with Aw = Ax and ||w||_p = value
};

// min_{v in ker A} ||x + v||_p, computed through the measurement-consistent
// l_p minimizer (l1_minimize for p = 1, the exact oracle for p < 1).
QuotientNormResult quotient_norm(const MeasurementMatrix& A, const RealVector& x,
                                 double p, const OracleOptions& opts = {});

struct PreservationPair {
  int i = 0, j = 0;          // indices into the family
  double direct_norm = 0.0;  // ||x_I - x_J||_p
  double quotient = 0.0;     // ||[x_I - x_J]||_{A,p}
  bool preserved = false;    // |quotient - direct| <= 1e-8
  bool separated = false;    // ||x_I - x_J||_p^p > 1
};

struct PreservationReport {
  std::vector<PreservationPair> pairs;
  bool all_preserved = true;
  bool all_separated = true;
};

// For all I != J in the family, checks that the quotient map preserves
// ||x_I - x_J||_p and that the packing separation ||x_I-x_J||_p^p > 1 holds.
PreservationReport norm_preservation_check(const MeasurementMatrix& A,
                                           const PackingFamily& family, double p,
                                           const OracleOptions& opts = {});

}  // namespace widthlab
