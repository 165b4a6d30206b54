#include <doctest.h>

#include <cmath>

#include "widthlab/certify.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/prng.hpp"
#include "widthlab/widths.hpp"

using namespace widthlab;

namespace {

MeasurementMatrix mat(int m, int N, std::initializer_list<double> vals) {
  Matrix A(m, N);
  int k = 0;
  for (double v : vals) {
    A(k / N, k % N) = v;
    ++k;
  }
  return matrix_from(std::move(A), "test");
}

}  // namespace

TEST_CASE("rip: orthogonal matrices have delta zero") {
  MeasurementMatrix I = matrix_from(Matrix::Identity(5, 5), "test");
  for (int s = 1; s <= 5; ++s) {
    const RipEstimate est = rip_constant(I, s, RipMethod::exhaustive);
    CHECK(est.delta == doctest::Approx(0.0));
    CHECK(est.supports_examined > 0);
  }
}

TEST_CASE("rip: hand-derived values") {
  const MeasurementMatrix A = mat(1, 2, {1, 1});
  CHECK(rip_constant(A, 1, RipMethod::exhaustive).delta == doctest::Approx(0.0));
  const RipEstimate d2 = rip_constant(A, 2, RipMethod::exhaustive);
  CHECK(d2.delta == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(d2.supports_examined == 1);

  const double r = 1.0 / std::sqrt(2.0);
  const MeasurementMatrix B = mat(2, 3, {1, 0, r, 0, 1, r});
  const RipEstimate est = rip_constant(B, 2, RipMethod::exhaustive);
  CHECK(est.delta == doctest::Approx(r).epsilon(1e-10));
  CHECK(est.supports_examined == 3);
  // witness is one of the spike/flat pairs {0,2} or {1,2}
  CHECK(est.witness_support.back() == 2);
}

TEST_CASE("rip: monotone in s and sampled below exhaustive") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MeasurementMatrix A = gaussian_matrix(6, 10, 40 + seed);
    double prev = 0.0;
    for (int s = 1; s <= 4; ++s) {
      const double delta = rip_constant(A, s, RipMethod::exhaustive).delta;
      CHECK(delta >= prev - 1e-12);
      prev = delta;
    }
    RipOptions opts;
    opts.samples = 30;
    opts.seed = seed;
    const RipEstimate sampled = rip_constant(A, 2, RipMethod::sampled, opts);
    const RipEstimate exhaustive = rip_constant(A, 2, RipMethod::exhaustive);
    CHECK(sampled.delta <= exhaustive.delta + 1e-12);
  }
}

TEST_CASE("rip: budget and argument guards") {
  const MeasurementMatrix A = gaussian_matrix(10, 40, 3);
  RipOptions opts;
  opts.max_supports = 100;
  CHECK_THROWS_AS(rip_constant(A, 4, RipMethod::exhaustive, opts), BudgetExceeded);
  CHECK_THROWS_AS(rip_constant(A, 0, RipMethod::exhaustive), std::invalid_argument);
  CHECK_THROWS_AS(rip_constant(A, 41, RipMethod::exhaustive), std::invalid_argument);
}

TEST_CASE("nsp exact-l1: trivial kernel holds vacuously") {
  MeasurementMatrix I = matrix_from(Matrix::Identity(4, 4), "test");
  const NspReport r = check_nsp(I, 2, 1.0, NspMethod::exact_l1);
  CHECK(r.holds);
  CHECK(r.worst_ratio == doctest::Approx(0.0));
}

TEST_CASE("nsp exact-l1: the boundary case [1 1]") {
  const MeasurementMatrix A = mat(1, 2, {1, 1});
  const NspReport r = check_nsp(A, 1, 1.0, NspMethod::exact_l1);
  CHECK_FALSE(r.holds);
  CHECK(r.boundary);
  CHECK(r.worst_ratio == doctest::Approx(0.5).epsilon(1e-10));
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->ratio == doctest::Approx(0.5));
}

TEST_CASE("nsp exact-l1: one-dimensional kernel with ratio 1/3") {
  const MeasurementMatrix A = mat(2, 3, {1, 0, 1, 0, 1, 1});
  const NspReport r = check_nsp(A, 1, 1.0, NspMethod::exact_l1);
  CHECK(r.holds);
  CHECK(r.worst_ratio == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("nsp exact-l1: budget guard and p validation") {
  const MeasurementMatrix A = gaussian_matrix(8, 30, 5);
  NspOptions opts;
  opts.max_lp_budget = 50;
  CHECK_THROWS_AS(check_nsp(A, 3, 1.0, NspMethod::exact_l1, opts), BudgetExceeded);
  CHECK_THROWS_AS(check_nsp(A, 1, 0.5, NspMethod::exact_l1), std::invalid_argument);
}

TEST_CASE("nsp: exact-l1 agrees with oracle-equivalence at p=1 (spot sweep)") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const MeasurementMatrix A = gaussian_matrix(6, 12, 5000 + seed);
    for (int s : {1, 2}) {
      const NspReport lp = check_nsp(A, s, 1.0, NspMethod::exact_l1);
      const NspReport oracle = check_nsp(A, s, 1.0, NspMethod::oracle_equivalence);
      CHECK(lp.holds == oracle.holds);
      // the holds flag must agree with the reported ratio
      CHECK(lp.holds == (lp.worst_ratio < 0.5 && !lp.boundary));
      CHECK(oracle.holds == (oracle.worst_ratio < 0.5 && !oracle.boundary));
    }
  }
}

TEST_CASE("nsp failure witnesses build non-unique-recovery counterexamples") {
  int failures_seen = 0;
  for (std::uint64_t seed = 0; seed < 10 && failures_seen < 3; ++seed) {
    const MeasurementMatrix A = gaussian_matrix(6, 12, 7000 + seed);
    const NspReport r = check_nsp(A, 2, 1.0, NspMethod::exact_l1);
    if (r.holds) continue;
    ++failures_seen;
    REQUIRE(r.witness.has_value());
    const RealVector& v = r.witness->v;
    CHECK((A.A * v).norm() < 1e-7);  // genuine kernel vector
    RealVector x = RealVector::Zero(12);
    RealVector z = -v;
    for (int i : r.witness->support) {
      x[i] = v[i];
      z[i] = 0.0;
    }
    // same measurements, no larger l1 norm: x is not the unique minimizer
    CHECK((A.A * x - A.A * z).norm() < 1e-7);
    CHECK(lp_quasinorm(z, 1.0) <= lp_quasinorm(x, 1.0) + 1e-9);
  }
  CHECK(failures_seen > 0);  // 6x12 at s=2 fails often enough to exercise this
}

TEST_CASE("nsp oracle-equivalence works for p < 1") {
  // ker = span(1,1,1,-1): worst 1-support ratio is 1/4 for p in (0,1]
  const MeasurementMatrix A = mat(3, 4, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1});
  const NspReport r = check_nsp(A, 1, 0.5, NspMethod::oracle_equivalence);
  CHECK(r.holds);
  CHECK(r.worst_ratio == doctest::Approx(0.25).epsilon(1e-8));

  const MeasurementMatrix B = mat(1, 2, {1, 1});
  const NspReport rb = check_nsp(B, 1, 0.5, NspMethod::oracle_equivalence);
  CHECK_FALSE(rb.holds);
}

TEST_CASE("nsp heuristic refutes and stays sound") {
  // kernel contains the 2-sparse vector (1,-1,0,...): s=1 ratio reaches 1/2
  const MeasurementMatrix A = mat(1, 6, {1, 1, 0, 0, 0, 0});
  const NspReport r = check_nsp(A, 1, 0.5, NspMethod::heuristic);
  CHECK_FALSE(r.holds);
  CHECK(r.worst_ratio >= 0.5 - 1e-9);
  REQUIRE(r.witness.has_value());
  CHECK((A.A * r.witness->v).norm() < 1e-6);

  // trivial kernel: complete decision, not refutation-only
  MeasurementMatrix I = matrix_from(Matrix::Identity(4, 4), "test");
  const NspReport ri = check_nsp(I, 1, 0.5, NspMethod::heuristic);
  CHECK(ri.holds);
  CHECK_FALSE(ri.refutation_only);

  // nontrivial holds case: only "no violation found"
  const MeasurementMatrix C = mat(3, 4, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1});
  const NspReport rc = check_nsp(C, 1, 0.5, NspMethod::heuristic);
  CHECK(rc.holds);
  CHECK(rc.refutation_only);
  CHECK(rc.worst_ratio < 0.5);
}

TEST_CASE("quotient norm") {
  const MeasurementMatrix A = mat(1, 2, {1, 1});
  RealVector k(2);
  k << 1, -1;  // x in ker A
  CHECK(quotient_norm(A, k, 1.0).value == doctest::Approx(0.0));

  MeasurementMatrix I = matrix_from(Matrix::Identity(3, 3), "test");
  RealVector x(3);
  x << 1, -2, 0.5;
  for (double p : {0.5, 1.0}) {
    CHECK(quotient_norm(I, x, p).value == doctest::Approx(lp_quasinorm(x, p)));
  }

  RealVector e1(2);
  e1 << 1, 0;
  const QuotientNormResult q = quotient_norm(A, e1, 1.0);
  CHECK(q.value == doctest::Approx(1.0));
  CHECK((A.A * q.representative - A.A * e1).norm() < 1e-10);

  // never exceeds the plain norm
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const MeasurementMatrix G = gaussian_matrix(4, 8, 300 + seed);
    CounterRng rng(seed, "quot");
    RealVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = rng.gaussian(i);
    for (double p : {0.5, 1.0}) {
      CHECK(quotient_norm(G, v, p).value <= lp_quasinorm(v, p) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("norm preservation over a packing family") {
  const PackingFamily family = greedy_packing(8, 2);
  MeasurementMatrix I = matrix_from(Matrix::Identity(8, 8), "test");
  for (double p : {0.5, 1.0}) {
    const PreservationReport r = norm_preservation_check(I, family, p);
    CHECK(r.all_preserved);
    CHECK(r.all_separated);
    for (const auto& pair : r.pairs) {
      // disjoint supports: ||x_I - x_J||_p^p = 2s/s = 2
      CHECK(std::pow(pair.direct_norm, p) == doctest::Approx(2.0));
    }
  }

  // a rank-1 matrix destroys preservation
  Matrix flat = Matrix::Zero(2, 8);
  flat.row(0).setOnes();
  flat.row(1).setOnes();
  const PreservationReport broken =
      norm_preservation_check(matrix_from(std::move(flat), "test"), family, 1.0);
  CHECK_FALSE(broken.all_preserved);
}

TEST_CASE("nsp certified at order 2s is consistent with the measurement bound") {
  // whenever the property holds, m must meet the closed-form lower bound
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const MeasurementMatrix A = gaussian_matrix(6, 12, 8000 + seed);
    for (int s : {1, 2}) {
      const NspReport r = check_nsp(A, 2 * s, 1.0, NspMethod::exact_l1);
      if (r.holds) {
        CHECK(6 >= min_measurements_lp(s, 12, 1.0));
      }
    }
  }
}
