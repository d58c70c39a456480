#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace maxmin {

using Coefficient = std::uint64_t;

/// Sparse polynomial in x and q with nonnegative integer coefficients.
/// Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  struct Term {
    std::size_t x = 0;
    std::size_t q = 0;
    Coefficient c = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  void add(std::size_t x, std::size_t q, Coefficient c) {
    if (c == 0) return;
    terms_[{x, q}] += c;
  }

  Coefficient coefficient(std::size_t x, std::size_t q) const {
    auto it = terms_.find({x, q});
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Terms ordered by x ascending, then q descending.
  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto it = terms_.begin(); it != terms_.end();) {
      const std::size_t x = it->first.first;
      auto end = it;
      while (end != terms_.end() && end->first.first == x) ++end;
      for (auto back = end; back != it;) {
        --back;
        out.push_back({x, back->first.second, back->second});
      }
      it = end;
    }
    return out;
  }

  /// Highest x-degree present, or 0 when empty.
  std::size_t x_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

  /// Coefficients of x^d as a polynomial in q, index = q-degree.
  std::vector<Coefficient> x_slice(std::size_t x) const {
    std::vector<Coefficient> out;
    for (auto it = terms_.lower_bound({x, 0}); it != terms_.end() && it->first.first == x; ++it) {
      if (out.size() <= it->first.second) out.resize(it->first.second + 1, 0);
      out[it->first.second] = it->second;
    }
    return out;
  }

  /// Largest q-degree with a nonzero coefficient at x^d; -1 if none.
  std::int64_t max_q_degree(std::size_t x) const {
    const auto slice = x_slice(x);
    return static_cast<std::int64_t>(slice.size()) - 1;
  }

  /// Setting q = 1: coefficient list indexed by x-degree.
  std::vector<Coefficient> at_q_one() const {
    std::vector<Coefficient> out(terms_.empty() ? 0 : x_degree() + 1, 0);
    for (const auto& [key, c] : terms_) out[key.first] += c;
    return out;
  }

  Coefficient coefficient_sum() const {
    Coefficient total = 0;
    for (const auto& [key, c] : terms_) total += c;
    return total;
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other) {
    for (const auto& [key, c] : other.terms_) terms_[key] += c;
    return *this;
  }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<std::pair<std::size_t, std::size_t>, Coefficient> terms_;
};

namespace detail {

inline std::string power(const char* var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

inline std::string q_term(Coefficient c, std::size_t q) {
  if (q == 0) return std::to_string(c);
  return (c == 1 ? std::string() : std::to_string(c)) + power("q", q);
}

}  // namespace detail

/// Human form, e.g. "1 + x(q + 3) + x^2".
inline std::string to_string(const BivariatePolynomial& poly) {
  if (poly.empty()) return "0";
  std::string out;
  for (std::size_t x = 0; x <= poly.x_degree(); ++x) {
    const auto slice = poly.x_slice(x);
    std::vector<std::string> parts;
    for (std::size_t q = slice.size(); q-- > 0;) {
      if (slice[q] != 0) parts.push_back(detail::q_term(slice[q], q));
    }
    if (parts.empty()) continue;
    std::string term;
    if (x == 0) {
      for (std::size_t k = 0; k < parts.size(); ++k) term += (k ? " + " : "") + parts[k];
    } else if (parts.size() == 1) {
      term = (parts[0] == "1" ? std::string() : parts[0]) + detail::power("x", x);
    } else {
      term = detail::power("x", x) + "(";
      for (std::size_t k = 0; k < parts.size(); ++k) term += (k ? " + " : "") + parts[k];
      term += ")";
    }
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

}  // namespace maxmin
