#pragma once

#include <bit>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace maxmin::detail {

// Static range-extremum index queries: O(n log n) build, O(1) query.
// `Better(a, b)` is true when a should win over b; values must be distinct.
template <typename T, typename Better>
class SparseTable {
 public:
  SparseTable() = default;

  explicit SparseTable(std::span<const T> values) { assign(values); }

  void assign(std::span<const T> values) {
    values_ = values;
    const std::size_t n = values.size();
    const std::size_t levels = n == 0 ? 0 : std::bit_width(n);
    table_.resize(levels);
    if (levels == 0) return;
    table_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = i;
    for (std::size_t k = 1; k < levels; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const std::size_t count = n - (std::size_t{1} << k) + 1;
      table_[k].resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        table_[k][i] = pick(table_[k - 1][i], table_[k - 1][i + half]);
      }
    }
  }

  /// Index of the winning element in [lo, hi] (inclusive, lo <= hi).
  std::size_t query(std::size_t lo, std::size_t hi) const {
    const std::size_t k = std::bit_width(hi - lo + 1) - 1;
    return pick(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
  }

 private:
  std::size_t pick(std::size_t a, std::size_t b) const {
    return Better{}(values_[a], values_[b]) ? a : b;
  }

  std::span<const T> values_;
  std::vector<std::vector<std::size_t>> table_;
};

template <typename T>
using MinTable = SparseTable<T, std::less<T>>;

template <typename T>
using MaxTable = SparseTable<T, std::greater<T>>;

}  // namespace maxmin::detail
