#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "maxmin/permutation.hpp"
#include "maxmin/polynomial.hpp"
#include "maxmin/weight.hpp"

namespace maxmin {

/// Raised when an exhaustive operation would exceed the configured size.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::size_t threads = 1;
  /// Largest n for which S_n may be enumerated.
  std::size_t max_n = 11;
};

inline void check_limit(std::size_t n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > options.max_n) {
    throw LimitError("n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                     std::to_string(options.max_n));
  }
}

/// d(n-d-1), the largest weight of a length-n permutation with d descents.
inline std::int64_t maxwt(std::int64_t n, std::int64_t d) {
  if (d < 0 || n < 1 || d > n - 1) {
    throw std::invalid_argument("maxwt needs 0 <= d <= n-1");
  }
  return d * (n - d - 1);
}

/// Visits all of S_n split into n work units keyed by the first letter; each
/// unit runs in lexicographic order. `make_local()` creates per-worker state,
/// `visit(local, perm)` consumes one permutation, `merge(total, local)` folds
/// a worker's state into the result. The result does not depend on `threads`
/// as long as merge is commutative.
template <typename Local, typename MakeLocal, typename Visit, typename Merge>
Local reduce_permutations(std::size_t n, std::size_t threads, MakeLocal make_local, Visit visit,
                          Merge merge) {
  std::atomic<std::size_t> next_block{0};
  const auto work = [&](Local& local) {
    std::vector<Label> perm(n);
    for (std::size_t block; (block = next_block.fetch_add(1)) < n;) {
      perm[0] = static_cast<Label>(block + 1);
      for (std::size_t k = 1, v = 1; k < n; ++v) {
        if (v != block + 1) perm[k++] = static_cast<Label>(v);
      }
      do {
        visit(local, std::span<const Label>(perm));
      } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
  std::vector<Local> locals;
  locals.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) locals.push_back(make_local());
  if (workers == 1) {
    work(locals[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&, w] { work(locals[w]); });
  }
  Local total = make_local();
  for (auto& local : locals) merge(total, local);
  return total;
}

/// Coefficients of x^d counting permutations of S_n by descents.
inline std::vector<Coefficient> eulerian_polynomial(std::size_t n,
                                                    const EnumerationOptions& options = {}) {
  check_limit(n, options);
  return reduce_permutations<std::vector<Coefficient>>(
      n, options.threads, [n] { return std::vector<Coefficient>(n, 0); },
      [](std::vector<Coefficient>& counts, std::span<const Label> perm) {
        std::size_t d = 0;
        for (std::size_t k = 0; k + 1 < perm.size(); ++k) d += perm[k] > perm[k + 1];
        ++counts[d];
      },
      [](std::vector<Coefficient>& total, const std::vector<Coefficient>& part) {
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += part[k];
      });
}

/// E_n(x, q): permutations of S_n counted by (descents, weight).
inline BivariatePolynomial q_eulerian(std::size_t n, const EnumerationOptions& options = {}) {
  check_limit(n, options);
  const std::size_t q_span = static_cast<std::size_t>((n - 1) * (n - 1) / 4) + 1;
  struct Counts {
    std::vector<Coefficient> cells;
    WeightWorkspace workspace;
  };
  const auto cells = reduce_permutations<Counts>(
      n, options.threads, [&] { return Counts{std::vector<Coefficient>(n * q_span, 0), {}}; },
      [q_span](Counts& local, std::span<const Label> perm) {
        std::size_t d = 0;
        for (std::size_t k = 0; k + 1 < perm.size(); ++k) d += perm[k] > perm[k + 1];
        const auto w = static_cast<std::size_t>(local.workspace.weight(perm));
        ++local.cells[d * q_span + w];
      },
      [](Counts& total, const Counts& part) {
        for (std::size_t k = 0; k < total.cells.size(); ++k) total.cells[k] += part.cells[k];
      });
  BivariatePolynomial poly;
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t w = 0; w < q_span; ++w) poly.add(d, w, cells.cells[d * q_span + w]);
  }
  return poly;
}

/// Memoizes E_n(x, q) so several queries share one enumeration per n.
class QEulerianTable {
 public:
  explicit QEulerianTable(EnumerationOptions options = {}) : options_(options) {}

  const EnumerationOptions& options() const noexcept { return options_; }

  const BivariatePolynomial& get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, q_eulerian(n, options_)).first;
    return it->second;
  }

 private:
  EnumerationOptions options_;
  std::mutex mutex_;
  std::map<std::size_t, BivariatePolynomial> cache_;
};

/// E_n[x^d q^(maxwt(n,d) - k)]; 0 when the exponent would be negative.
inline Coefficient top_coefficient(QEulerianTable& table, std::size_t n, std::size_t d,
                                   std::size_t k) {
  const auto top = maxwt(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  if (static_cast<std::int64_t>(k) > top) return 0;
  return table.get(n).coefficient(d, static_cast<std::size_t>(top) - k);
}

struct StabilizationReport {
  bool stable = false;
  /// (n, coefficient) for n = d+k+1 .. n_max.
  std::vector<std::pair<std::size_t, Coefficient>> values;
};

/// Checks that E_n[x^d q^(maxwt(n,d) - k)] is the same for every n from
/// d+k+1 up to n_max.
inline StabilizationReport check_stabilization(std::size_t d, std::size_t k, std::size_t n_max,
                                               QEulerianTable& table) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const std::size_t start = d + k + 1;
  if (n_max < start) {
    throw std::invalid_argument("n_max must be at least d+k+1 = " + std::to_string(start));
  }
  check_limit(n_max, table.options());
  StabilizationReport report;
  for (std::size_t n = start; n <= n_max; ++n) {
    report.values.emplace_back(n, top_coefficient(table, n, d, k));
  }
  report.stable = std::all_of(report.values.begin(), report.values.end(), [&](const auto& v) {
    return v.second == report.values.front().second;
  });
  return report;
}

inline StabilizationReport check_stabilization(std::size_t d, std::size_t k, std::size_t n_max,
                                               const EnumerationOptions& options = {}) {
  QEulerianTable table(options);
  return check_stabilization(d, k, n_max, table);
}

/// a_k of W_d(t), read off E_{d+k+1} at its stabilization threshold.
inline Coefficient wd_coefficient(std::size_t d, std::size_t k, QEulerianTable& table) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const std::size_t n = d + k + 1;
  check_limit(n, table.options());
  return top_coefficient(table, n, d, k);
}

inline Coefficient wd_coefficient(std::size_t d, std::size_t k,
                                  const EnumerationOptions& options = {}) {
  QEulerianTable table(options);
  return wd_coefficient(d, k, table);
}

struct WdSeries {
  std::size_t d = 0;
  std::vector<Coefficient> coefficients;
};

/// [a_0, ..., a_{terms-1}] of W_d(t).
inline WdSeries wd_series(std::size_t d, std::size_t terms, QEulerianTable& table) {
  if (terms == 0) throw std::invalid_argument("terms must be positive");
  check_limit(d + terms, table.options());
  WdSeries series{d, {}};
  for (std::size_t k = 0; k < terms; ++k) series.coefficients.push_back(wd_coefficient(d, k, table));
  return series;
}

inline WdSeries wd_series(std::size_t d, std::size_t terms, const EnumerationOptions& options = {}) {
  QEulerianTable table(options);
  return wd_series(d, terms, table);
}

}  // namespace maxmin
