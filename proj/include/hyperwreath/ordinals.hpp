#pragma once

// Ordinals below omega^n in Cantor normal form.  Only the operations the
// transfinite degree needs are exposed: construction from a monomial,
// comparison and successor.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "partitions.hpp"

namespace hyperwreath {

class Ordinal {
public:
  using Coefficients = std::map<int, std::uint64_t, std::greater<int>>;

  Ordinal() = default;

  static Ordinal finite(std::uint64_t c) { return omega_power(0, c); }

  /// omega^e * c
  static Ordinal omega_power(int e, std::uint64_t c = 1) {
    if (e < 0) throw std::invalid_argument("Ordinal: negative exponent");
    Ordinal o;
    if (c != 0) o.terms_[e] = c;
    return o;
  }

  bool is_zero() const { return terms_.empty(); }

  std::uint64_t coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Exponent of the leading term; -1 for zero.
  int leading_exponent() const { return terms_.empty() ? -1 : terms_.begin()->first; }

  const Coefficients& terms() const { return terms_; }

  Ordinal successor() const {
    Ordinal o = *this;
    ++o.terms_[0];
    return o;
  }

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first <=> ib->first;
      if (ia->second != ib->second) return ia->second <=> ib->second;
    }
    if (ia != a.terms_.end()) return std::strong_ordering::greater;
    if (ib != b.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Ordinal& a, const Ordinal& b) = default;

  /// "w^3 + w*2 + 5"; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      if (e == 0) {
        s += std::to_string(c);
        continue;
      }
      s += "w";
      if (e != 1) s += "^" + std::to_string(e);
      if (c != 1) s += "*" + std::to_string(c);
    }
    return s;
  }

  /// Inverse of to_string.
  static Ordinal parse(const std::string& text);

private:
  friend Ordinal tdeg_of_monomial(const Partition&, int, int);
  friend Ordinal hypercentral_class(int);

  Coefficients terms_;
};

/// Transfinite degree of x^Lambda Delta_k in W_n:
///   sum_{i=1}^{n-k} w^{n-i}  +  sum_j w^{j-1} lambda_j.
/// Lambda must have parts <= k-1.
inline Ordinal tdeg_of_monomial(const Partition& lambda, int k, int n) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("tdeg_of_monomial: layer out of range");
  if (lambda.max_part() > k - 1)
    throw std::invalid_argument("tdeg_of_monomial: partition " + lambda.to_string() +
                                " has a part >= layer " + std::to_string(k));
  Ordinal o;
  for (int e = k; e <= n - 1; ++e) o.terms_[e] = 1;
  for (int j = 1; j <= lambda.max_part(); ++j)
    if (lambda.multiplicity(j) != 0) o.terms_[j - 1] = static_cast<std::uint64_t>(lambda.multiplicity(j));
  return o;
}

/// w^{n-1} + ... + w + 1, the length of the upper central series of W_n.
inline Ordinal hypercentral_class(int n) {
  if (n < 1) throw std::invalid_argument("hypercentral_class: n must be >= 1");
  Ordinal o;
  for (int e = 0; e <= n - 1; ++e) o.terms_[e] = 1;
  return o;
}

inline Ordinal Ordinal::parse(const std::string& text) {
  Ordinal o;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_uint = [&]() -> std::uint64_t {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw std::invalid_argument("Ordinal::parse: expected number at " + std::to_string(start));
    return std::stoull(text.substr(start, pos - start));
  };
  int last_exp = -1;
  bool first = true;
  skip_ws();
  if (text.substr(pos) == "0") return o;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!first) {
      if (text[pos] != '+') throw std::invalid_argument("Ordinal::parse: expected '+' at " + std::to_string(pos));
      ++pos;
      skip_ws();
    }
    int e = 0;
    std::uint64_t c = 1;
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = static_cast<int>(read_uint());
      }
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        c = read_uint();
      }
    } else {
      c = read_uint();
    }
    if (c == 0 || (!first && e >= last_exp))
      throw std::invalid_argument("Ordinal::parse: not in Cantor normal form: " + text);
    o.terms_[e] = c;
    last_exp = e;
    first = false;
  }
  if (first) throw std::invalid_argument("Ordinal::parse: empty input");
  return o;
}

} // namespace hyperwreath
