#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "widthlab/vectors.hpp"

namespace widthlab {

using Matrix = Eigen::MatrixXd;

struct MeasurementMatrix {
  Matrix A;
  std::string provenance;  // "gaussian{seed}", "zero", "file:..."
  int rows() const { return static_cast<int>(A.rows()); }
  int cols() const { return static_cast<int>(A.cols()); }
};

// Entries iid N(0, 1/m) from the counter-based stream keyed by seed;
// bit-identical for identical (m, N, seed).
MeasurementMatrix gaussian_matrix(int m, int N, std::uint64_t seed);

MeasurementMatrix zero_matrix(int m, int N);

MeasurementMatrix matrix_from(Matrix A, std::string provenance);

// Orthonormal basis of ker A. Rank decided by singular values above
// N * eps * sigma_max.
struct KernelBasis {
  Matrix V;  // N x k, orthonormal columns
  int rank = 0;
  int dimension() const { return static_cast<int>(V.cols()); }
};

KernelBasis kernel_basis(const MeasurementMatrix& A);
KernelBasis kernel_basis(const Matrix& A);

int matrix_rank(const Matrix& A);

struct LeastSquaresResult {
  RealVector coefficients;  // one per support index
  double residual_norm = 0.0;
  bool rank_deficient = false;  // minimum-norm solution returned in that case
  int rank = 0;
};

// Minimizes ||A_S z - y||_2 over the columns selected by `support`.
LeastSquaresResult least_squares_on_support(const Matrix& A, const RealVector& y,
                                            std::span<const int> support);

// (lambda_min, lambda_max) of a symmetric matrix; throws on asymmetric input.
std::pair<double, double> symmetric_eig_extremes(const Matrix& G);

}  // namespace widthlab
