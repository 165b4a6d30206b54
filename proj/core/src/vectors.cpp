#include "widthlab/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "widthlab/prng.hpp"

namespace widthlab {

namespace {
constexpr double kLogDomainThreshold = 0.1;
}

bool all_finite(const RealVector& x) {
  return x.allFinite();
}

void require_exponent(double p, bool allow_infinity) {
  if (std::isinf(p) && p > 0) {
    if (!allow_infinity) throw std::invalid_argument("exponent must be finite");
    return;
  }
  if (!(p > 0) || std::isnan(p)) {
    throw std::invalid_argument("exponent must be positive");
  }
}

void require_width_pair(double p, double q) {
  require_exponent(p, /*allow_infinity=*/false);
  require_exponent(q);
  if (p > 1.0) throw std::invalid_argument("width routines require p <= 1");
  if (!(q > p)) throw std::invalid_argument("width routines require q > p");
}

double lp_quasinorm(const RealVector& x, double p) {
  require_exponent(p);
  if (x.size() == 0) return 0.0;
  if (std::isinf(p)) return x.cwiseAbs().maxCoeff();

  const double peak = x.cwiseAbs().maxCoeff();
  if (peak == 0.0) return 0.0;

  if (p < kLogDomainThreshold) {
    // ||x||_p = peak * (sum (|x_i|/peak)^p)^{1/p}; combine in logs so the
    // 1/p power only overflows when the value itself does.
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      const double a = std::abs(x[i]);
      if (a > 0.0) sum += std::exp(p * (std::log(a) - std::log(peak)));
    }
    return std::exp(std::log(peak) + std::log(sum) / p);
  }

  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sum += std::pow(std::abs(x[i]) / peak, p);
  }
  return peak * std::pow(sum, 1.0 / p);
}

RealVector nonincreasing_rearrangement(const RealVector& x) {
  RealVector r = x.cwiseAbs();
  std::sort(r.data(), r.data() + r.size(), std::greater<double>());
  return r;
}

double weak_lp_quasinorm(const RealVector& x, double p) {
  require_exponent(p);
  const RealVector r = nonincreasing_rearrangement(x);
  double best = 0.0;
  for (Eigen::Index l = 0; l < r.size(); ++l) {
    const double factor =
        std::isinf(p) ? 1.0 : std::pow(static_cast<double>(l + 1), 1.0 / p);
    best = std::max(best, factor * r[l]);
  }
  return best;
}

std::vector<int> top_support(const RealVector& x, int s) {
  const int N = static_cast<int>(x.size());
  s = std::clamp(s, 0, N);
  std::vector<int> idx(N);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(x[a]) > std::abs(x[b]);  // stable: equal magnitudes keep index order
  });
  idx.resize(s);
  std::sort(idx.begin(), idx.end());
  return idx;
}

RealVector hard_threshold(const RealVector& x, int s) {
  RealVector z = RealVector::Zero(x.size());
  for (int i : top_support(x, s)) z[i] = x[i];
  return z;
}

double best_s_term_error(const RealVector& x, int s, double p) {
  require_exponent(p);
  const int N = static_cast<int>(x.size());
  if (s < 0) throw std::invalid_argument("sparsity level must be >= 0");
  if (s >= N) return 0.0;
  RealVector r = nonincreasing_rearrangement(x);
  return lp_quasinorm(r.tail(N - s), p);
}

RealVector packing_vector(std::span<const int> support, int s, double p, int N) {
  require_exponent(p, /*allow_infinity=*/false);
  if (static_cast<int>(support.size()) != s) {
    throw std::invalid_argument("packing_vector: |I| != s");
  }
  RealVector x = RealVector::Zero(N);
  const double scale = std::pow(static_cast<double>(s), -1.0 / p);
  for (int i : support) {
    if (i < 0 || i >= N) throw std::invalid_argument("packing_vector: index out of range");
    if (x[i] != 0.0) throw std::invalid_argument("packing_vector: repeated index");
    x[i] = scale;
  }
  return x;
}

RealVector compressible_model_vector(int N, double p, std::uint64_t seed) {
  require_exponent(p, /*allow_infinity=*/false);
  if (p > 1.0) throw std::invalid_argument("compressible_model_vector: requires p <= 1");
  if (N < 1) throw std::invalid_argument("compressible_model_vector: N >= 1");

  CounterRng rng(seed, "compressible-model");
  std::vector<int> pos(N);
  std::iota(pos.begin(), pos.end(), 0);
  // Fisher-Yates with counter-indexed draws.
  for (int i = N - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i), i + 1));
    std::swap(pos[i], pos[j]);
  }
  RealVector x = RealVector::Zero(N);
  for (int l = 0; l < N; ++l) {
    const double sign = (rng.bits(static_cast<std::uint64_t>(N + l)) & 1) ? 1.0 : -1.0;
    x[pos[l]] = sign * std::pow(static_cast<double>(l + 1), -1.0 / p);
  }
  return x;
}

double compressibility_coefficient(double p, double q) {
  require_width_pair(p, q);
  return std::pow(q / p - 1.0, -1.0 / q);
}

}  // namespace widthlab
