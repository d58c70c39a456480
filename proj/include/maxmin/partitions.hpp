#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxmin {

using Count = std::uint64_t;

/// C(n, k) in exact integer arithmetic; 0 when k > n.
constexpr Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<Count>(r);
}

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t sum() const {
    std::size_t s = 0;
    for (auto p : parts) s += p;
    return s;
  }
  std::size_t length() const noexcept { return parts.size(); }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Calls fn(const Partition&) for every partition of n, in decreasing
/// lexicographic order ([n] first, [1,...,1] last).
template <typename Fn>
void for_each_partition(std::size_t n, Fn&& fn) {
  Partition p;
  if (n == 0) {
    fn(p);
    return;
  }
  p.parts.push_back(n);
  while (true) {
    fn(p);
    // Strip trailing ones, then decrement the last part > 1 and refill.
    std::size_t ones = 0;
    while (!p.parts.empty() && p.parts.back() == 1) {
      p.parts.pop_back();
      ++ones;
    }
    if (p.parts.empty()) return;
    const std::size_t top = --p.parts.back();
    std::size_t rest = ones + 1;
    while (rest > top) {
      p.parts.push_back(top);
      rest -= top;
    }
    if (rest > 0) p.parts.push_back(rest);
  }
}

inline std::vector<Partition> enumerate_partitions(std::size_t n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// Number of partitions of n indexed by part count.
inline std::vector<Count> partitions_by_length(std::size_t n) {
  std::vector<Count> out(n + 1, 0);
  for_each_partition(n, [&](const Partition& p) { ++out[p.length()]; });
  return out;
}

/// T(n, k) = sum over partitions of n of C(#parts, k).
inline Count t_nk(std::size_t n, std::size_t k) {
  Count total = 0;
  for_each_partition(n, [&](const Partition& p) { total += binomial(p.length(), k); });
  return total;
}

struct PartitionContribution {
  Partition partition;
  Count ways = 0;
};

/// The nonzero terms of T(n, k): each partition with at least k parts and
/// C(#parts, k).
inline std::vector<PartitionContribution> t_nk_contributions(std::size_t n, std::size_t k) {
  std::vector<PartitionContribution> out;
  for_each_partition(n, [&](const Partition& p) {
    if (p.length() >= k) out.push_back({p, binomial(p.length(), k)});
  });
  return out;
}

struct PartitionTriangle {
  /// rows[n][k] = T(n, k), 0 <= k <= n.
  std::vector<std::vector<Count>> rows;

  Count at(std::size_t n, std::size_t k) const {
    if (n >= rows.size()) throw std::out_of_range("row beyond triangle");
    return k < rows[n].size() ? rows[n][k] : 0;
  }

  /// Cells that coincide with W_d(t) coefficients.
  static bool bold(std::size_t n, std::size_t k) { return 2 * k >= n; }
};

inline PartitionTriangle t_triangle(std::size_t n_max) {
  PartitionTriangle tri;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto by_length = partitions_by_length(n);
    std::vector<Count> row(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::size_t len = k; len <= n; ++len) row[k] += by_length[len] * binomial(len, k);
    }
    tri.rows.push_back(std::move(row));
  }
  return tri;
}

/// Malformed triangle input; `line` is 1-based.
class TriangleFormatError : public std::runtime_error {
 public:
  TriangleFormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class TriangleFormat { Auto, Csv, BFile };

struct TriangleCell {
  std::size_t n = 0;
  std::size_t k = 0;
  Count value = 0;
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

inline Count parse_count(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(token, &used);
  } catch (const std::exception&) {
    throw TriangleFormatError("not a nonnegative integer: '" + token + "'", line);
  }
  if (used != token.size() || token.front() == '-') {
    throw TriangleFormatError("not a nonnegative integer: '" + token + "'", line);
  }
  return v;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Reads triangle cells. CSV: the i-th data line is row n = i-1 as
/// comma-separated values. b-file: "index value" lines, index row-major from
/// T(0,0). Blank lines and '#' comments are skipped in both.
inline std::vector<TriangleCell> read_triangle(std::istream& in,
                                               TriangleFormat format = TriangleFormat::Auto) {
  std::vector<TriangleCell> cells;
  std::string line;
  std::size_t line_no = 0;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::blank_or_comment(line)) continue;
    if (format == TriangleFormat::Auto) {
      std::istringstream probe(line);
      std::string a, b, c;
      probe >> a >> b >> c;
      const bool two_plain = !b.empty() && c.empty() && line.find(',') == std::string::npos;
      format = two_plain ? TriangleFormat::BFile : TriangleFormat::Csv;
    }
    if (format == TriangleFormat::Csv) {
      std::vector<Count> values;
      std::stringstream ss(line);
      std::string token;
      while (std::getline(ss, token, ',')) {
        token = detail::trim(token);
        if (token.empty()) throw TriangleFormatError("empty field", line_no);
        values.push_back(detail::parse_count(token, line_no));
      }
      if (values.size() != row + 1) {
        throw TriangleFormatError("row " + std::to_string(row) + " must have " +
                                      std::to_string(row + 1) + " entries",
                                  line_no);
      }
      for (std::size_t k = 0; k < values.size(); ++k) cells.push_back({row, k, values[k]});
      ++row;
    } else {
      std::istringstream ss(line);
      std::string idx_token, value_token, extra;
      ss >> idx_token >> value_token >> extra;
      if (value_token.empty() || !extra.empty()) {
        throw TriangleFormatError("expected 'index value'", line_no);
      }
      const Count idx = detail::parse_count(idx_token, line_no);
      std::size_t n = 0;
      while ((n + 1) * (n + 2) / 2 <= idx) ++n;
      cells.push_back({n, static_cast<std::size_t>(idx - n * (n + 1) / 2),
                       detail::parse_count(value_token, line_no)});
    }
  }
  return cells;
}

struct CellCheck {
  std::size_t n = 0;
  std::size_t k = 0;
  Count expected = 0;  // from the file
  Count actual = 0;    // computed
  bool match() const noexcept { return expected == actual; }
};

struct TriangleReport {
  std::vector<CellCheck> cells;

  std::size_t mismatches() const {
    std::size_t bad = 0;
    for (const auto& c : cells) bad += !c.match();
    return bad;
  }
  bool ok() const { return mismatches() == 0; }
};

inline TriangleReport crosscheck_triangle(const std::vector<TriangleCell>& cells) {
  TriangleReport report;
  std::size_t n_max = 0;
  for (const auto& c : cells) n_max = std::max(n_max, c.n);
  const PartitionTriangle tri = cells.empty() ? PartitionTriangle{} : t_triangle(n_max);
  for (const auto& c : cells) report.cells.push_back({c.n, c.k, c.value, tri.at(c.n, c.k)});
  return report;
}

inline TriangleReport crosscheck_triangle(const std::string& path,
                                          TriangleFormat format = TriangleFormat::Auto) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return crosscheck_triangle(read_triangle(in, format));
}

}  // namespace maxmin
