#pragma once

// Shared generators and brute-force oracles for the test suites. Nothing here
// calls the weight or tree algorithms under test except where noted.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "maxmin/maxmin.hpp"

namespace maxmin::testing {

/// Calls fn(const Permutation&) for all of S_n in lexicographic order.
template <typename Fn>
void for_each_permutation(std::size_t n, Fn&& fn) {
  std::vector<Label> v(n);
  std::iota(v.begin(), v.end(), Label{1});
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Label> v(n);
  std::iota(v.begin(), v.end(), Label{1});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Every tree the block construction can produce when each segment minimum
/// may attach to any node of each block (not only its maximum). Recursion
/// inside blocks is unaffected by the choice. Exponential; n <= 5.
inline std::vector<MaxminTree> all_construction_trees(const Permutation& p) {
  const ExtendedPermutation ext(p);
  const BlockDecomposer splitter(ext);
  // Collect every (minimum, block) attachment slot of the recursion.
  std::vector<std::pair<Label, Interval>> slots;
  for_each_decomposition(splitter, [&](Interval, const BlockDecomposition& split) {
    const Label m = ext[split.min_position];
    for (const Interval& b : split.left_blocks) slots.emplace_back(m, b);
    if (split.right_block) slots.emplace_back(m, *split.right_block);
  });
  std::vector<MaxminTree> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      edges.emplace_back(slots[s].first, ext[slots[s].second.first + choice[s]]);
    }
    out.emplace_back(p.size() + 1, edges);
    std::size_t s = 0;
    while (s < slots.size() && ++choice[s] == slots[s].second.length()) choice[s++] = 0;
    if (s == slots.size()) break;
  }
  return out;
}

/// Partition counts by number of parts via p(n, l) = p(n-1, l-1) + p(n-l, l).
inline std::vector<std::vector<std::uint64_t>> partition_count_table(std::size_t n_max) {
  std::vector<std::vector<std::uint64_t>> p(n_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));
  p[0][0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t l = 1; l <= n; ++l) p[n][l] = p[n - 1][l - 1] + p[n - l][l];
  }
  return p;
}

/// Pascal's rule, independent of maxmin::binomial.
inline std::uint64_t pascal(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return k <= n ? row[k] : 0;
}

}  // namespace maxmin::testing
