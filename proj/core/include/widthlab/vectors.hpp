#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

namespace widthlab {

using RealVector = Eigen::VectorXd;

// p = infinity selects the max norm; otherwise p must be > 0.
// For 0 < p < 1 this is the usual quasi-norm; for p < 0.1 the sum is
// assembled in the log domain so the final power does not overflow before
// the true value does.
double lp_quasinorm(const RealVector& x, double p);

// Absolute values sorted non-increasingly.
RealVector nonincreasing_rearrangement(const RealVector& x);

// max_l l^{1/p} |x*_l| with x* the non-increasing rearrangement.
double weak_lp_quasinorm(const RealVector& x, double p);

// l_p norm of x minus its s largest-magnitude entries; s=0 gives ||x||_p,
// s>=N gives 0.
double best_s_term_error(const RealVector& x, int s, double p);

// Keeps the s largest-magnitude entries in place, zeroes the rest.
// Ties among equal magnitudes are broken toward the lowest index, so the
// result is deterministic and attains best_s_term_error for every p.
RealVector hard_threshold(const RealVector& x, int s);

// Indices of the s largest-magnitude entries (same tie-break), ascending.
std::vector<int> top_support(const RealVector& x, int s);

// x_I = s^{-1/p} sum_{i in I} e_i over 0-based indices; ||x_I||_p = 1.
RealVector packing_vector(std::span<const int> support, int s, double p, int N);

// Vector with rearrangement x*_l = l^{-1/p}, seeded signs and positions;
// its weak-l_p quasi-norm is exactly 1. Requires 0 < p <= 1.
RealVector compressible_model_vector(int N, double p, std::uint64_t seed);

// D_{p,q} = (q/p - 1)^{-1/q}, the weak-ball tail coefficient.
double compressibility_coefficient(double p, double q);

bool all_finite(const RealVector& x);

// Shared validation helpers: throw std::invalid_argument on violation.
void require_exponent(double p, bool allow_infinity = true);
void require_width_pair(double p, double q);  // 0 < p <= 1, p < q

}  // namespace widthlab
