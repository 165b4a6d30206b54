#include "widthlab/packing.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask to_mask(const std::vector<int>& set, int words) {
  Mask m(words, 0);
  for (int i : set) m[i >> 6] |= std::uint64_t{1} << (i & 63);
  return m;
}

int intersection_size(const Mask& a, const Mask& b) {
  int n = 0;
  for (size_t w = 0; w < a.size(); ++w) n += std::popcount(a[w] & b[w]);
  return n;
}

bool next_combination(std::vector<int>& comb, int N) {
  const int s = static_cast<int>(comb.size());
  for (int i = s - 1; i >= 0; --i) {
    if (comb[i] < N - s + i) {
      ++comb[i];
      for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

double packing_size_bound(int N, int s) {
  if (s <= 0 || s >= N) throw std::invalid_argument("packing_size_bound: need 0 < s < N");
  return std::pow(static_cast<double>(N) / (4.0 * s), s / 2.0);
}

PackingFamily greedy_packing(int N, int s, const PackingOptions& opts) {
  if (s < 1 || s >= N) throw std::invalid_argument("greedy_packing: need 1 <= s < N");

  const int words = (N + 63) / 64;
  PackingFamily family{N, s, {}};
  std::vector<Mask> masks;

  std::vector<int> comb(s);
  for (int i = 0; i < s; ++i) comb[i] = i;

  std::uint64_t examined = 0;
  do {
    if (++examined > opts.max_candidates) {
      throw BudgetExceeded("greedy_packing: candidate budget exceeded");
    }
    Mask cand = to_mask(comb, words);
    bool admissible = true;
    for (const Mask& kept : masks) {
      // |I cap J| < s/2  <=>  2*|I cap J| < s
      if (2 * intersection_size(cand, kept) >= s) {
        admissible = false;
        break;
      }
    }
    if (admissible) {
      family.sets.push_back(comb);
      masks.push_back(std::move(cand));
    }
  } while (next_combination(comb, N));

  return family;
}

PackingCheck check_packing(const PackingFamily& family) {
  PackingCheck report;
  const int N = family.N;
  const int s = family.s;
  if (s < 1 || s >= N || family.sets.empty()) {
    report.detail = "degenerate family";
    return report;
  }

  report.sizes_ok = true;
  for (size_t k = 0; k < family.sets.size(); ++k) {
    const auto& set = family.sets[k];
    bool ok = static_cast<int>(set.size()) == s;
    for (size_t i = 0; ok && i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= N) ok = false;
      if (i > 0 && set[i] <= set[i - 1]) ok = false;
    }
    if (!ok) {
      report.sizes_ok = false;
      report.violating_i = static_cast<int>(k);
      report.detail = "set is not an s-subset of [N]";
      return report;
    }
  }

  const int words = (N + 63) / 64;
  std::vector<Mask> masks;
  masks.reserve(family.sets.size());
  for (const auto& set : family.sets) masks.push_back(to_mask(set, words));

  report.intersections_ok = true;
  for (size_t i = 0; i < masks.size() && report.intersections_ok; ++i) {
    for (size_t j = i + 1; j < masks.size(); ++j) {
      if (2 * intersection_size(masks[i], masks[j]) >= s) {
        report.intersections_ok = false;
        report.violating_i = static_cast<int>(i);
        report.violating_j = static_cast<int>(j);
        report.detail = "pair intersects in >= s/2 points";
        break;
      }
    }
  }

  report.size_bound_ok =
      static_cast<double>(family.sets.size()) >= packing_size_bound(N, s);
  if (!report.size_bound_ok && report.detail.empty()) {
    report.detail = "family smaller than (N/4s)^{s/2}";
  }
  return report;
}

}  // namespace widthlab
