#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxmin/eulerian.hpp"
#include "maxmin/min_decomp.hpp"
#include "maxmin/partitions.hpp"

namespace maxmin {

/// #{σ in S_n : des(σ) = d, weight(σ) = w}.
inline Count count_perms_by_weight(std::size_t n, std::size_t d, std::size_t w,
                                   QEulerianTable& table) {
  check_limit(n, table.options());
  return table.get(n).coefficient(d, w);
}

inline Count count_perms_by_weight(std::size_t n, std::size_t d, std::size_t w,
                                   const EnumerationOptions& options = {}) {
  QEulerianTable table(options);
  return count_perms_by_weight(n, d, w, table);
}

/// Weight one step of n-d-1 move-ups below the maximum: (n-d-1)(d-1).
inline std::size_t near_max_weight(std::size_t n, std::size_t d) { return (n - d - 1) * (d - 1); }

/// Increasing stem labels 1 = x_1 < ... < x_{n-d} <= n of a near-maximal
/// minimum decomposition tree.
struct Stem {
  std::vector<Label> labels;
  std::size_t n = 0;
  std::size_t d = 0;

  /// sum_i (x_i - i): how far the stem already sits below the heaviest one.
  std::size_t deficit() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      total += static_cast<std::size_t>(labels[i]) - (i + 1);
    }
    return total;
  }

  friend bool operator==(const Stem&, const Stem&) = default;
};

/// All stems of length n-d with x_1 = 1, x_i <= n and deficit <= n-d-1, in
/// lexicographic order.
inline std::vector<Stem> enumerate_stems(std::size_t n, std::size_t d) {
  if (d >= n) throw std::invalid_argument("need n - d >= 1");
  const std::size_t length = n - d;
  const std::size_t budget = n - d - 1;
  std::vector<Stem> out;
  std::vector<Label> labels{1};
  // Depth-first in increasing order of the next label.
  const auto extend = [&](auto&& self, std::size_t spent) -> void {
    if (labels.size() == length) {
      out.push_back({labels, n, d});
      return;
    }
    const std::size_t index = labels.size() + 1;  // 1-based index of the next label
    for (auto x = static_cast<std::size_t>(labels.back()) + 1; x <= n; ++x) {
      const std::size_t cost = x - index;
      if (spent + cost > budget) break;
      labels.push_back(static_cast<Label>(x));
      self(self, spent + cost);
      labels.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

/// Number of minimum decomposition trees on this stem: the remaining
/// n-d-1-deficit move-ups spread over d+1 leaves, C(n-1-deficit, d).
inline Count stem_count(const Stem& s) {
  const std::size_t deficit = s.deficit();
  if (deficit > s.n - 1) return 0;
  return binomial(s.n - 1 - deficit, s.d);
}

/// Parts x_i - (i-1) for i = n-d down to 2, then d - deficit ones (the x_1
/// part together with the padding ones). Throws std::domain_error when
/// deficit > d, where no such partition exists.
inline Partition stem_to_partition(const Stem& s) {
  const std::size_t deficit = s.deficit();
  if (deficit > s.d) {
    throw std::domain_error("stem deficit " + std::to_string(deficit) + " exceeds d = " +
                            std::to_string(s.d));
  }
  Partition p;
  for (std::size_t i = s.labels.size(); i >= 2; --i) {
    p.parts.push_back(static_cast<std::size_t>(s.labels[i - 1]) - (i - 1));
  }
  p.parts.insert(p.parts.end(), s.d - deficit, 1);
  return p;
}

struct StemTotalsReport {
  std::vector<Stem> stems;
  std::vector<Count> counts;
  std::vector<Partition> partitions;  // empty when the map is undefined
  Count stem_total = 0;
  Count tnk = 0;
  bool injective = false;
  bool ok = false;
};

/// Sum of stem_count over all stems against T(n-1, d), plus injectivity of
/// stem_to_partition into partitions of n-1 with at least d parts.
inline StemTotalsReport verify_stem_totals(std::size_t n, std::size_t d) {
  StemTotalsReport report;
  report.stems = enumerate_stems(n, d);
  for (const auto& s : report.stems) {
    report.counts.push_back(stem_count(s));
    report.stem_total += report.counts.back();
  }
  report.tnk = t_nk(n - 1, d);
  bool mapped = true;
  std::set<Partition> images;
  for (const auto& s : report.stems) {
    try {
      Partition p = stem_to_partition(s);
      mapped = mapped && p.sum() == n - 1 && p.length() >= d &&
               binomial(p.length(), d) == stem_count(s);
      images.insert(p);
      report.partitions.push_back(std::move(p));
    } catch (const std::domain_error&) {
      mapped = false;
    }
  }
  if (!mapped) report.partitions.clear();
  report.injective = mapped && images.size() == report.stems.size();
  report.ok = report.injective && report.stem_total == report.tnk;
  return report;
}

struct BijectionRecord {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t weight = 0;
  Count brute = 0;
  Count stem_total = 0;
  Count tnk = 0;
  bool bold_region = false;     // 2d >= n-1
  bool theorem_region = false;  // n >= 2d
  /// brute == T(n-1, d)
  bool pass = false;
  /// brute == stem total == T(n-1, d)
  bool three_way = false;
};

inline BijectionRecord verify_bijection(std::size_t n, std::size_t d, QEulerianTable& table) {
  if (d < 1 || d >= n) throw std::invalid_argument("need 1 <= d <= n-1");
  check_limit(n, table.options());
  BijectionRecord r;
  r.n = n;
  r.d = d;
  r.weight = near_max_weight(n, d);
  r.brute = count_perms_by_weight(n, d, r.weight, table);
  r.tnk = t_nk(n - 1, d);
  for (const auto& s : enumerate_stems(n, d)) r.stem_total += stem_count(s);
  r.bold_region = 2 * d + 1 >= n;
  r.theorem_region = n >= 2 * d;
  r.pass = r.brute == r.tnk;
  r.three_way = r.pass && r.stem_total == r.tnk;
  return r;
}

inline BijectionRecord verify_bijection(std::size_t n, std::size_t d,
                                        const EnumerationOptions& options = {}) {
  QEulerianTable table(options);
  return verify_bijection(n, d, table);
}

/// True when the stem nodes form a single chain hanging from the root.
inline bool stem_is_path(const MinDecompTree& t) {
  std::size_t stem_nodes = 0;
  std::size_t ends = 0;
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) {
    if (t.is_leaf(v)) continue;
    ++stem_nodes;
    std::size_t stem_children = 0;
    for (Label c : t.children(v)) stem_children += !t.is_leaf(c);
    if (stem_children > 1) return false;
    ends += stem_children == 0;
  }
  return stem_nodes == 0 || ends == 1;
}

/// Stem labels from the root downwards; meaningful when stem_is_path holds.
inline std::vector<Label> stem_chain(const MinDecompTree& t) {
  std::vector<Label> chain;
  Label v = t.root();
  while (!t.is_leaf(v)) {
    chain.push_back(v);
    Label next = 0;
    for (Label c : t.children(v)) {
      if (!t.is_leaf(c)) next = c;
    }
    if (next == 0) break;
    v = next;
  }
  return chain;
}

}  // namespace maxmin
