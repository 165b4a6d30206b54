#include <doctest.h>

#include <cmath>
#include <numbers>

#include "widthlab/certify.hpp"
#include "widthlab/prng.hpp"
#include "widthlab/widths.hpp"
#include "test_support.hpp"

using namespace widthlab;

TEST_CASE("rate band values") {
  const RateBand b = rate_band(1024, 64, 1.0, 2.0);
  CHECK(b.rate == doctest::Approx(0.2427893).epsilon(1e-6));
  // the two log spellings are the same number
  CHECK(b.alt_rate == doctest::Approx(b.rate).epsilon(1e-14));
  CHECK(b.vybiral == doctest::Approx(std::pow(65.0, -0.5)));

  // min{...} clamps to 1 when (ln(N/m)+1)/m >= 1
  const RateBand clamped = rate_band(1024, 2, 1.0, 2.0);
  CHECK(clamped.rate == doctest::Approx(1.0));

  CHECK(rate_band(100, 3, 1.0, 2.0).vybiral == doctest::Approx(0.5));  // (1/4)^{1/2}

  // q > 2 display companions
  const RateBand wide = rate_band(256, 16, 1.0, 4.0);
  REQUIRE(wide.upper_q2.has_value());
  REQUIRE(wide.sqrt_m_floor.has_value());
  CHECK(*wide.sqrt_m_floor == doctest::Approx(0.25));

  CHECK_THROWS_AS(rate_band(16, 16, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(rate_band(16, 4, 1.5, 2.0), std::invalid_argument);
}

TEST_CASE("lower bound constants") {
  const LowerBoundConstants k = lower_bound_constants(1.0, 2.0);
  CHECK(k.c1 == doctest::Approx(0.4551196).epsilon(1e-6));
  CHECK(k.c1 == doctest::Approx(0.455).epsilon(1e-3));
  CHECK(k.c2 == 4.0);
  CHECK(k.d == doctest::Approx(0.2043127).epsilon(1e-5));  // ~0.204 at p=1
  CHECK(k.c == doctest::Approx(std::pow(0.5, 1.5)));
  CHECK(k.c_pq == doctest::Approx(k.c * std::pow(k.d, 0.5)));

  const LowerBoundConstants half = lower_bound_constants(0.5, 2.0);
  CHECK(half.d == doctest::Approx(k.d * 0.5));  // d scales linearly in p
}

TEST_CASE("minimal measurements for exact recovery") {
  CHECK(min_measurements_lp(4, 1024, 1.0) == 8);
  CHECK(min_measurements_lp(16, 1024, 1.0) == 32);
  // small p: the log term becomes irrelevant and 2s dominates
  CHECK(min_measurements_lp(4, 1024, 0.01) == 8);
  CHECK(min_measurements_lp(16, 1 << 20, 0.01) == 32);
  CHECK_THROWS_AS(min_measurements_lp(6, 12, 1.0), std::invalid_argument);
}

TEST_CASE("stability measurement bound") {
  CHECK(1.0 / (2.0 * std::log(5.0)) == doctest::Approx(0.3106675).epsilon(1e-6));
  const double Cp = stability_rate_constant(1.0);
  CHECK(Cp == doctest::Approx(0.2266509).epsilon(1e-5));
  // ceil(0.2266509 * 4 * ln(1024 e / 4)) = ceil(5.934) = 6
  CHECK(stability_min_measurements(4, 1024, 1.0, 1.0) == 6);
  // weaker stability hypothesis forces nothing (C' -> 0, logarithmically)
  CHECK(stability_rate_constant(1e3) < Cp);
  CHECK(stability_rate_constant(1e30) < stability_rate_constant(1e3));
  CHECK(stability_rate_constant(1e30) < 1e-2);
  CHECK(stability_min_measurements(4, 1024, 1.0, 1e12) <= 2);
}

TEST_CASE("rip sample complexity") {
  CHECK(rip_sample_complexity(4, 256, 2.0) == 42);
  CHECK(rip_sample_complexity(16, 16, 3.0) == 48);  // s=N: ceil(C1*N)
  // monotone in each argument
  CHECK(rip_sample_complexity(5, 256, 2.0) >= rip_sample_complexity(4, 256, 2.0));
  CHECK(rip_sample_complexity(4, 512, 2.0) >= rip_sample_complexity(4, 256, 2.0));
  CHECK(rip_sample_complexity(4, 256, 2.5) >= rip_sample_complexity(4, 256, 2.0));
}

TEST_CASE("case split constant") {
  const double D1 = case_split_constant(1.0);
  CHECK(D1 / 2.0 > std::numbers::e);
  CHECK((D1 / 2.0) / (1.0 + std::log(D1 / 2.0)) > 1.0);
  const double D2 = case_split_constant(2.0);
  CHECK(D2 > D1);
  CHECK((D2 / 2.0) / (1.0 + std::log(D2 / 2.0)) > 2.0);
  // default C1=2 splits the desk-scale sweep into both regimes
  CHECK_FALSE(upper_bound_case1(32, 8, 2.0));
  CHECK(upper_bound_case1(256, 64, 2.0));
}

TEST_CASE("empirical width lower: one-dimensional kernel by hand") {
  Matrix A(1, 2);
  A << 1, 1;
  const WidthEstimate est =
      empirical_width_lower(matrix_from(std::move(A), "test"), 1.0, 2.0, {});
  CHECK(est.empirical_lower == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
  CHECK(lp_quasinorm(est.witness, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("empirical width lower: zero matrix attains the spike value 1") {
  const WidthEstimate est = empirical_width_lower(zero_matrix(2, 6), 0.5, 2.0, {});
  CHECK(est.empirical_lower == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("empirical width lower: bounded by 1 and above the coordinate floor") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const MeasurementMatrix A = gaussian_matrix(6, 24, 60 + seed);
    for (double p : {0.5, 1.0}) {
      WidthSearchOptions opts;
      opts.starts = 16;
      opts.iterations = 60;
      opts.seed = seed;
      const WidthEstimate est = empirical_width_lower(A, p, 2.0, opts);
      CHECK(est.empirical_lower <= 1.0 + 1e-9);  // ||v||_q <= ||v||_p for p < q
      const double floor = std::pow(7.0, -(1.0 / p - 0.5));
      CHECK(est.empirical_lower >= floor - 1e-6);
      CHECK(est.diag.coordinate_candidate >= floor - 1e-9);
      // witness is a unit-quasinorm kernel vector achieving the value
      CHECK((A.A * est.witness).norm() < 1e-7);
      CHECK(lp_quasinorm(est.witness, 2.0) ==
            doctest::Approx(est.empirical_lower).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(
      empirical_width_lower(matrix_from(Matrix::Identity(3, 3), "t"), 1.0, 2.0, {}),
      std::invalid_argument);
}

TEST_CASE("certified width upper: assembled factors at delta = 1/3") {
  // frozen algebra for p=1, q=2, r=1: 2 sqrt((1+d)/(1-d)) C(d) / sqrt(s),
  // which at d=1/3 is 2 sqrt(2) C(1/3) / sqrt(s)
  const MeasurementMatrix A = testing::identity_hadamard(4);  // kernel nontrivial
  RipEstimate rip;
  rip.s = 2;
  rip.delta = 1.0 / 3.0;
  rip.method = RipMethod::exhaustive;
  const WidthEstimate est = certified_width_upper(A, 1.0, 2.0, 1, rip);
  REQUIRE(est.certified_upper.has_value());
  const double expected = 2.0 * std::sqrt(2.0) * stability_constant(1.0 / 3.0);
  CHECK(*est.certified_upper == doctest::Approx(expected).epsilon(1e-12));

  // same assembly at p=1/2 gains the tail factor s^{-(1/p-1)}
  RipEstimate rip2;
  rip2.s = 4;
  rip2.delta = 1.0 / 3.0;
  rip2.method = RipMethod::exhaustive;
  const WidthEstimate est2 = certified_width_upper(A, 0.5, 2.0, 2, rip2);
  REQUIRE(est2.certified_upper.has_value());
  const double expected2 = 2.0 * std::sqrt(2.0) * std::pow(2.0, -0.5) *
                           stability_constant(1.0 / 3.0) * std::pow(2.0, -1.0);
  CHECK(*est2.certified_upper == doctest::Approx(expected2).epsilon(1e-12));
}

TEST_CASE("certified width upper: identity-Hadamard end to end") {
  const int m = 16;
  const MeasurementMatrix A = testing::identity_hadamard(m);
  const RipEstimate rip = rip_constant(A, 2, RipMethod::exhaustive);
  CHECK(rip.delta == doctest::Approx(1.0 / std::sqrt(m)).epsilon(1e-10));

  const WidthEstimate upper = certified_width_upper(A, 1.0, 2.0, 1, rip);
  REQUIRE(upper.certified_upper.has_value());

  WidthSearchOptions search;
  search.starts = 24;
  search.iterations = 80;
  const WidthEstimate lower = empirical_width_lower(A, 1.0, 2.0, search);
  CHECK(lower.empirical_lower <= *upper.certified_upper + 1e-9);
}

TEST_CASE("certified width upper: guards") {
  const MeasurementMatrix A = testing::identity_hadamard(4);
  RipEstimate rip;
  rip.method = RipMethod::exhaustive;
  rip.s = 2;
  rip.delta = 0.9;  // adopted constant undefined here
  CHECK_THROWS_AS(certified_width_upper(A, 1.0, 2.0, 1, rip), std::invalid_argument);

  rip.method = RipMethod::sampled;
  rip.delta = 0.1;
  CHECK_THROWS_AS(certified_width_upper(A, 1.0, 2.0, 1, rip), std::invalid_argument);

  // trivial kernel rejected
  MeasurementMatrix I = matrix_from(Matrix::Identity(4, 4), "t");
  RipEstimate rid;
  rid.method = RipMethod::exhaustive;
  rid.s = 2;
  rid.delta = 0.0;
  CHECK_THROWS_AS(certified_width_upper(I, 1.0, 2.0, 1, rid), std::invalid_argument);
}

TEST_CASE("em recovery error") {
  // perfect recovery with the identity
  MeasurementMatrix I = matrix_from(Matrix::Identity(6, 6), "t");
  const EmErrorReport perfect =
      em_recovery_error(I, Method::l1(), SamplerSpec::ball(1.0), 2.0, 10, 3);
  CHECK(perfect.worst_error < 1e-9);
  CHECK(perfect.c1 == doctest::Approx(2.0));
  CHECK(perfect.c2 == doctest::Approx(1.0));

  // zero matrix: error equals ||x||_q of the samples
  const EmErrorReport zero = em_recovery_error(zero_matrix(2, 6), Method::l1(),
                                               SamplerSpec::weak_ball(0.5), 2.0, 8, 5);
  double max_norm = 0.0;
  for (int t = 0; t < 8; ++t) {
    const RealVector x =
        compressible_model_vector(6, 0.5, derive_seed({5, static_cast<std::uint64_t>(t)}));
    max_norm = std::max(max_norm, lp_quasinorm(x, 2.0));
  }
  CHECK(zero.worst_error == doctest::Approx(max_norm).epsilon(1e-9));

  // packing sampler + a matrix with the recovery property: exact on x_I
  Matrix B(3, 4);
  B << 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1;
  const PackingFamily family{4, 1, {{0}, {1}, {2}, {3}}};
  const EmErrorReport packed =
      em_recovery_error(matrix_from(std::move(B), "t"), Method::exact(0.5),
                        SamplerSpec::packing(family, 0.5), 2.0, 10, 7);
  CHECK(packed.trials == 4);
  CHECK(packed.worst_error < 1e-9);
  CHECK(packed.c1 == doctest::Approx(4.0));  // 2^{1/p} at p=1/2
}

TEST_CASE("sandwich: error of the trivial measurement pair vs width witness") {
  // for v in ker A, reconstructing +-v from the same (zero) measurements
  // cannot beat ||v||_q / C2; with Delta(0) = 0 this is an identity check
  const MeasurementMatrix A = testing::identity_hadamard(8);
  const WidthEstimate est = empirical_width_lower(A, 1.0, 2.0, {});
  const RecoveryResult at_zero = l1_minimize(A, RealVector::Zero(8));
  REQUIRE(at_zero.status == RecoveryStatus::optimal);
  const double err_plus = lp_quasinorm(est.witness - at_zero.solution, 2.0);
  const double err_minus = lp_quasinorm(-est.witness - at_zero.solution, 2.0);
  const double c2 = 1.0;  // l2 is a norm
  CHECK(std::max(err_plus, err_minus) >= est.empirical_lower / c2 - 1e-9);
}

TEST_CASE("stability-shaped bound holds for p < 1 on a certified matrix") {
  // delta_2 = 1/4 here, so the adopted constant applies below p = 1 too
  const MeasurementMatrix A = testing::identity_hadamard(16);
  const RipEstimate rip = rip_constant(A, 2, RipMethod::exhaustive);
  REQUIRE(rip.delta < std::sqrt(2.0) - 1.0);
  const double C = stability_constant(rip.delta);
  const double p = 0.5;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const RealVector x = compressible_model_vector(32, p, seed);
    const RecoveryResult res = lp_minimize_irls(A, RealVector(A.A * x), p);
    const double num = std::pow(lp_quasinorm(x - res.solution, p), p);
    const double den = std::pow(best_s_term_error(x, 1, p), p);
    CHECK(num <= C * den * (1.0 + 1e-9));
  }
}

TEST_CASE("contradiction monitor stays quiet on honest instances") {
  // the lower-bound argument forbids (tiny width value) + (certified order-2
  // property); a 1x5 matrix puts 2-sparse vectors in the kernel, so even a
  // fake tiny value cannot fire the monitor
  Matrix A(1, 5);
  A << 1.0, 0.7, -0.3, 0.2, 1.1;
  const ContradictionReplay replay =
      replay_contradiction_monitor(matrix_from(std::move(A), "t"), 1.0, 2.0, 0.0);
  CHECK(replay.order == 2);
  CHECK(replay.threshold > 0.0);
  CHECK_FALSE(replay.nsp_certified);
  CHECK_FALSE(replay.fired);

  // realistic value above the threshold short-circuits
  const MeasurementMatrix G = gaussian_matrix(4, 12, 9);
  const WidthEstimate est = empirical_width_lower(G, 1.0, 2.0, {});
  const ContradictionReplay quiet =
      replay_contradiction_monitor(G, 1.0, 2.0, est.empirical_lower);
  CHECK_FALSE(quiet.fired);
}
