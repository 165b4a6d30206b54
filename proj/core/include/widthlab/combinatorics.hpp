#pragma once

#include <vector>

namespace widthlab {

// Advances a sorted s-combination of {0..N-1} to its lexicographic
// successor; returns false when comb was the last one.
inline bool next_combination(std::vector<int>& comb, int N) {
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

inline std::vector<int> first_combination(int s) {
  std::vector<int> comb(s);
  for (int i = 0; i < s; ++i) comb[i] = i;
  return comb;
}

// C(N,s) as a double (saturates gracefully for budget checks).
inline double binomial(int N, int s) {
  if (s < 0 || s > N) return 0.0;
  double out = 1.0;
  for (int k = 1; k <= s; ++k) out = out * (N - s + k) / k;
  return out;
}

}  // namespace widthlab
