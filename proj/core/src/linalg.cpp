#include "widthlab/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "widthlab/prng.hpp"

namespace widthlab {

MeasurementMatrix gaussian_matrix(int m, int N, std::uint64_t seed) {
  if (m < 1 || N < 1) throw std::invalid_argument("gaussian_matrix: m, N >= 1");
  CounterRng rng(seed, "gaussian-matrix");
  const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
  Matrix A(m, N);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < N; ++j) {
      A(i, j) = sigma * rng.gaussian(static_cast<std::uint64_t>(i) * N + j);
    }
  }
  return {std::move(A), "gaussian{" + std::to_string(seed) + "}"};
}

MeasurementMatrix zero_matrix(int m, int N) {
  if (m < 1 || N < 1) throw std::invalid_argument("zero_matrix: m, N >= 1");
  return {Matrix::Zero(m, N), "zero"};
}

MeasurementMatrix matrix_from(Matrix A, std::string provenance) {
  if (A.rows() < 1 || A.cols() < 1) throw std::invalid_argument("matrix_from: empty matrix");
  if (!A.allFinite()) throw std::invalid_argument("matrix_from: entries must be finite");
  return {std::move(A), std::move(provenance)};
}

KernelBasis kernel_basis(const Matrix& A) {
  const int N = static_cast<int>(A.cols());
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double tol = N * std::numeric_limits<double>::epsilon() * smax;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  KernelBasis basis;
  basis.rank = rank;
  basis.V = svd.matrixV().rightCols(N - rank);
  return basis;
}

KernelBasis kernel_basis(const MeasurementMatrix& A) { return kernel_basis(A.A); }

int matrix_rank(const Matrix& A) { return kernel_basis(A).rank; }

LeastSquaresResult least_squares_on_support(const Matrix& A, const RealVector& y,
                                            std::span<const int> support) {
  const int m = static_cast<int>(A.rows());
  const int k = static_cast<int>(support.size());
  if (k > m) throw std::invalid_argument("least_squares_on_support: |S| <= m required");

  LeastSquaresResult out;
  if (k == 0) {
    out.coefficients = RealVector(0);
    out.residual_norm = y.norm();
    return out;
  }

  Matrix As(m, k);
  for (int j = 0; j < k; ++j) {
    const int col = support[j];
    if (col < 0 || col >= A.cols()) {
      throw std::invalid_argument("least_squares_on_support: index out of range");
    }
    As.col(j) = A.col(col);
  }

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(As);
  out.coefficients = cod.solve(y);
  out.rank = static_cast<int>(cod.rank());
  out.rank_deficient = out.rank < k;
  out.residual_norm = (As * out.coefficients - y).norm();
  return out;
}

std::pair<double, double> symmetric_eig_extremes(const Matrix& G) {
  if (G.rows() != G.cols()) throw std::invalid_argument("symmetric_eig_extremes: square input required");
  const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
  if ((G - G.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument("symmetric_eig_extremes: asymmetric input");
  }
  const int n = static_cast<int>(G.rows());
  if (n == 1) return {G(0, 0), G(0, 0)};
  if (n == 2) {
    const double mean = 0.5 * (G(0, 0) + G(1, 1));
    const double off = 0.5 * (G(0, 1) + G(1, 0));
    const double radius = std::hypot(0.5 * (G(0, 0) - G(1, 1)), off);
    return {mean - radius, mean + radius};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (G + G.transpose()),
                                            Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return {ev(0), ev(n - 1)};
}

}  // namespace widthlab
