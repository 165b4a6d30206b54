#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace widthlab {

// Family of s-subsets of {0,...,N-1} with pairwise intersections < s/2.
struct PackingFamily {
  int N = 0;
  int s = 0;
  std::vector<std::vector<int>> sets;  // each sorted ascending
};

struct PackingOptions {
  // Cap on the number of lexicographic candidates examined; the greedy scan
  // is exact below the cap and throws BudgetExceeded above it.
  std::uint64_t max_candidates = 50'000'000;
};

// Elimination-style greedy over the lexicographic stream of s-subsets:
// a candidate is kept iff it meets every kept set in fewer than s/2 points.
// Deterministic; for s <= N/4 the family size meets (N/(4s))^{s/2}.
PackingFamily greedy_packing(int N, int s, const PackingOptions& opts = {});

struct PackingCheck {
  bool sizes_ok = false;          // every set has exactly s elements of [N]
  bool intersections_ok = false;  // all pairwise intersections < s/2
  bool size_bound_ok = false;     // |sets| >= (N/(4s))^{s/2}
  int violating_i = -1;           // first offending pair for the failed check
  int violating_j = -1;
  std::string detail;
  bool all_ok() const { return sizes_ok && intersections_ok && size_bound_ok; }
};

PackingCheck check_packing(const PackingFamily& family);

// (N/(4s))^{s/2}
double packing_size_bound(int N, int s);

}  // namespace widthlab
