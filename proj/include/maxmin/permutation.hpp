#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maxmin {

/// Node label / permutation value. Labels are 1-based everywhere.
using Label = std::int32_t;

/// Raised by parse_permutation. `position` is the 1-based token index.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word containing each of 1..n exactly once.
class Permutation {
 public:
  /// Validates that `values` is a rearrangement of 1..n (n >= 1).
  explicit Permutation(std::vector<Label> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("permutation must be nonempty");
    std::vector<bool> seen(values_.size() + 1, false);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const Label v = values_[i];
      if (v < 1 || static_cast<std::size_t>(v) > values_.size()) {
        throw ParseError("label " + std::to_string(v) + " out of range [1, " +
                             std::to_string(values_.size()) + "] at position " +
                             std::to_string(i + 1),
                         i + 1);
      }
      if (seen[v]) {
        throw ParseError("duplicate label " + std::to_string(v) + " at position " +
                             std::to_string(i + 1),
                         i + 1);
      }
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<Label> values)
      : Permutation(std::vector<Label>(values)) {}

  static Permutation identity(std::size_t n) {
    std::vector<Label> v(n);
    std::iota(v.begin(), v.end(), Label{1});
    return Permutation(std::move(v));
  }

  static Permutation reversal(std::size_t n) {
    std::vector<Label> v(n);
    std::iota(v.rbegin(), v.rend(), Label{1});
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }

  /// 0-based element access.
  Label operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<const Label> values() const noexcept { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Label> values_;
};

/// Parses whitespace- or comma-separated labels, e.g. "2 1 3" or "2,1,3".
inline Permutation parse_permutation(std::string_view text) {
  std::vector<Label> values;
  std::size_t pos = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t index = values.size() + 1;
    Label v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("non-integer token '" + std::string(token) + "' at position " +
                           std::to_string(index),
                       index);
    }
    values.push_back(v);
    pos = end;
  }
  if (values.empty()) throw ParseError("empty permutation", 0);
  return Permutation(std::move(values));
}

/// 1-based positions i with p[i] > p[i+1], where the word is extended by n+1.
/// Position n is never a descent.
inline std::vector<std::size_t> descent_positions(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) out.push_back(i + 1);
  }
  return out;
}

inline std::size_t descent_count(const Permutation& p) {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d += p[i] > p[i + 1];
  return d;
}

/// Values sitting at descent positions, ascending.
inline std::vector<Label> descent_values(const Permutation& p) {
  std::vector<Label> out;
  for (std::size_t pos : descent_positions(p)) out.push_back(p[pos - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

/// The working word  (n+2) . p . (n+1) . 0  used by the tree and range
/// algorithms. Index 0 is the front sentinel; p occupies 1..n.
class ExtendedPermutation {
 public:
  explicit ExtendedPermutation(const Permutation& p) : n_(p.size()), values_(p.size() + 3) {
    const auto n = static_cast<Label>(n_);
    values_[0] = n + 2;
    std::copy(p.values().begin(), p.values().end(), values_.begin() + 1);
    values_[n_ + 1] = n + 1;
    values_[n_ + 2] = 0;
  }

  /// Length of the original permutation.
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  Label operator[](std::size_t i) const noexcept { return values_[i]; }
  std::span<const Label> values() const noexcept { return values_; }

  /// True when position i (1..n+1) is a descent of the extended word. n+1 always is.
  bool is_descent(std::size_t i) const noexcept { return values_[i] > values_[i + 1]; }

  Permutation original() const {
    return Permutation(std::vector<Label>(values_.begin() + 1, values_.begin() + 1 + n_));
  }

  friend bool operator==(const ExtendedPermutation&, const ExtendedPermutation&) = default;

 private:
  std::size_t n_;
  std::vector<Label> values_;
};

inline ExtendedPermutation extend(const Permutation& p) { return ExtendedPermutation(p); }

}  // namespace maxmin
