#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxmin/detail/sparse_table.hpp"
#include "maxmin/permutation.hpp"

namespace maxmin {

/// Inclusive positions [left, right] of an ExtendedPermutation.
struct SubtreeRange {
  std::size_t left = 0;
  std::size_t right = 0;

  std::size_t length() const noexcept { return right - left + 1; }
  friend bool operator==(const SubtreeRange&, const SubtreeRange&) = default;
};

/// Subtree of the non-descent at position i, as a window of the word.
///
/// With j the first position right of i holding a smaller value, m the
/// position of the maximum strictly between i and j, M the nearest position
/// left of m holding a value larger than ext[m], and L the nearest position
/// left of i holding a value smaller than ext[i] (0 if none), the subtree is
/// [max(M, L) + 1, m]. Direct scans; O(n) per call.
inline SubtreeRange subtree_range(const ExtendedPermutation& ext, std::size_t i) {
  if (i < 1 || i > ext.n() + 1 || ext.is_descent(i)) {
    throw std::invalid_argument("position " + std::to_string(i) + " is not a non-descent");
  }
  std::size_t j = i + 1;
  while (ext[j] > ext[i]) ++j;
  std::size_t m = i + 1;
  for (std::size_t k = i + 2; k < j; ++k) {
    if (ext[k] > ext[m]) m = k;
  }
  std::size_t big = m - 1;
  while (ext[big] < ext[m]) --big;
  std::size_t small = i - 1;
  while (small > 0 && ext[small] > ext[i]) --small;
  return {std::max(big, small) + 1, m};
}

/// One row of the --explain report.
struct NonDescentRange {
  std::size_t position = 0;
  Label value = 0;
  SubtreeRange range;
  std::size_t descents = 0;
};

/// Ranges of every non-descent with the number of descents inside each.
inline std::vector<NonDescentRange> subtree_ranges(const Permutation& p) {
  const ExtendedPermutation ext(p);
  std::vector<NonDescentRange> out;
  for (std::size_t i = 1; i <= ext.n() + 1; ++i) {
    if (ext.is_descent(i)) continue;
    const SubtreeRange r = subtree_range(ext, i);
    std::size_t descents = 0;
    for (std::size_t k = r.left; k <= r.right; ++k) descents += ext.is_descent(k);
    out.push_back({i, ext[i], r, descents});
  }
  return out;
}

/// O(n^2): sum of descents inside each non-descent's range, minus n.
inline std::int64_t weight_via_ranges(const Permutation& p) {
  std::int64_t total = 0;
  for (const auto& row : subtree_ranges(p)) total += static_cast<std::int64_t>(row.descents);
  return total - static_cast<std::int64_t>(p.size());
}

/// Reusable buffers for the O(n log n) weight. Nearest smaller/greater
/// indices come from monotonic stacks, the in-between maximum from a sparse
/// table, and descent counts from a prefix sum. Not thread-safe; use one per
/// thread.
class WeightWorkspace {
 public:
  /// `perm` must be a permutation of 1..n (not re-validated here).
  std::int64_t weight(std::span<const Label> perm) {
    const std::size_t n = perm.size();
    const std::size_t size = n + 3;
    word_.resize(size);
    word_[0] = static_cast<Label>(n + 2);
    std::copy(perm.begin(), perm.end(), word_.begin() + 1);
    word_[n + 1] = static_cast<Label>(n + 1);
    word_[n + 2] = 0;

    next_smaller_.resize(size);
    prev_smaller_.resize(size);
    prev_greater_.resize(size);
    descent_prefix_.resize(size);

    stack_.clear();
    for (std::size_t k = size; k-- > 0;) {
      while (!stack_.empty() && word_[stack_.back()] > word_[k]) stack_.pop_back();
      next_smaller_[k] = stack_.empty() ? size : stack_.back();
      stack_.push_back(k);
    }
    stack_.clear();
    for (std::size_t k = 0; k < size; ++k) {
      while (!stack_.empty() && word_[stack_.back()] > word_[k]) stack_.pop_back();
      prev_smaller_[k] = stack_.empty() ? 0 : stack_.back();
      stack_.push_back(k);
    }
    stack_.clear();
    for (std::size_t k = 0; k < size; ++k) {
      while (!stack_.empty() && word_[stack_.back()] < word_[k]) stack_.pop_back();
      prev_greater_[k] = stack_.empty() ? 0 : stack_.back();
      stack_.push_back(k);
    }
    // descent_prefix_[k] = number of descents among positions 1..k.
    descent_prefix_[0] = 0;
    for (std::size_t k = 1; k <= n + 1; ++k) {
      descent_prefix_[k] = descent_prefix_[k - 1] + (word_[k] > word_[k + 1] ? 1 : 0);
    }
    maxs_.assign(std::span<const Label>(word_));

    std::int64_t total = 0;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      if (word_[i] > word_[i + 1]) continue;
      const std::size_t j = next_smaller_[i];
      const std::size_t m = maxs_.query(i + 1, j - 1);
      const std::size_t left = std::max(prev_greater_[m], prev_smaller_[i]) + 1;
      total += descent_prefix_[m] - descent_prefix_[left - 1];
    }
    return total - static_cast<std::int64_t>(n);
  }

 private:
  std::vector<Label> word_;
  std::vector<std::size_t> next_smaller_;
  std::vector<std::size_t> prev_smaller_;
  std::vector<std::size_t> prev_greater_;
  std::vector<std::int64_t> descent_prefix_;
  std::vector<std::size_t> stack_;
  detail::MaxTable<Label> maxs_;
};

/// O(n log n) weight; same result as weight_via_ranges.
inline std::int64_t weight_accelerated(const Permutation& p) {
  WeightWorkspace workspace;
  return workspace.weight(p.values());
}

}  // namespace maxmin
