#pragma once

// Sparse multivariate polynomials over Q in x_1, x_2, ...  Group data is
// integral; rational coefficients only appear as scratch (Taylor terms).

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partitions.hpp"

namespace hyperwreath {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown by every text parser in the library; `position` is a byte offset.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Graded lexicographic order on exponent vectors: total degree first, then
/// the larger exponent of x_1, x_2, ... wins.
struct GrlexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

class Poly {
public:
  using Terms = std::map<Partition, Rational, GrlexLess>;

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(const Integer& c) : Poly(Rational(c)) {}
  explicit Poly(Rational c) {
    c.canonicalize();
    if (c != 0) terms_.emplace(Partition(), std::move(c));
  }

  /// x_j
  static Poly variable(int j) { return monomial(Partition::unit(j), 1); }

  static Poly monomial(const Partition& exponent, Rational c) {
    Poly p;
    c.canonicalize();
    if (c != 0) p.terms_.emplace(exponent, std::move(c));
    p.nvars_ = exponent.max_part();
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

  Rational constant_term() const {
    auto it = terms_.find(Partition());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Partition& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Declared number of variables; widened by every operation to the max of
  /// the operands.  Always >= used_vars().
  int nvars() const { return std::max(nvars_, used_vars()); }

  Poly& widen(int m) {
    nvars_ = std::max(nvars_, m);
    return *this;
  }

  /// Highest index j such that x_j occurs.
  int used_vars() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.max_part());
    return m;
  }

  bool is_integral() const {
    for (const auto& [e, c] : terms_)
      if (c.get_den() != 1) return false;
    return true;
  }

  int degree_in(int j) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.multiplicity(j));
    return d;
  }

  int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    nvars_ = std::max(nvars_, o.nvars_);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    r.nvars_ = std::max(a.nvars_, b.nvars_);
    return r;
  }
  friend Poly operator*(const Rational& s, Poly p) {
    if (s == 0) return Poly().widen(p.nvars_);
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
  }

  Poly pow(unsigned e) const {
    Poly result(1), base = *this;
    result.widen(nvars());
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Formal d/dx_j.
  Poly partial_derivative(int j) const {
    if (j < 1) throw std::invalid_argument("partial_derivative: variable index must be >= 1");
    Poly r;
    for (const auto& [e, c] : terms_) {
      const int m = e.multiplicity(j);
      if (m == 0) continue;
      r.add_term(e.adjusted(j, -1), c * m);
    }
    r.nvars_ = nvars();
    return r;
  }

  /// p(sub_1, ..., sub_m); sub needs an entry for every variable used by p.
  Poly substitute(std::span<const Poly> sub) const {
    const int used = used_vars();
    if (static_cast<int>(sub.size()) < used)
      throw std::invalid_argument("substitute: need " + std::to_string(used) + " substitutions, got " +
                                  std::to_string(sub.size()));
    // powers[j][e] = sub_j^e, filled lazily
    std::vector<std::vector<Poly>> powers(used);
    auto power = [&](int j, int e) -> const Poly& {
      auto& cache = powers[j - 1];
      if (cache.empty()) cache.emplace_back(1);
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * sub[j - 1]);
      return cache[e];
    };
    Poly r;
    for (const auto& [e, c] : terms_) {
      Poly t(c);
      for (int j = 1; j <= e.max_part(); ++j)
        if (e.multiplicity(j) != 0) t *= power(j, e.multiplicity(j));
      r += t;
    }
    int width = 0;
    for (const Poly& s : sub) width = std::max(width, s.nvars());
    r.nvars_ = std::max(r.nvars_, width);
    return r;
  }

  /// Finite difference p(x + h e_j) - p(x).  h may only involve x_1..x_{j-1}.
  Poly difference(int j, const Poly& h) const {
    if (j < 1) throw std::invalid_argument("difference: variable index must be >= 1");
    if (h.used_vars() >= j)
      throw std::invalid_argument("difference: step for x" + std::to_string(j) + " depends on x" +
                                  std::to_string(h.used_vars()));
    const int width = std::max({used_vars(), j});
    std::vector<Poly> sub;
    sub.reserve(width);
    for (int i = 1; i <= width; ++i) sub.push_back(i == j ? variable(i) + h : variable(i));
    Poly r = substitute(sub) - *this;
    r.nvars_ = std::max({nvars(), h.nvars(), j});
    return r;
  }

  /// Exact value at an integer point; the point must cover every used variable.
  Rational evaluate(std::span<const Integer> point) const {
    if (static_cast<int>(point.size()) < used_vars())
      throw std::invalid_argument("evaluate: point too short");
    Rational v = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int j = 1; j <= e.max_part(); ++j) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), point[j - 1].get_mpz_t(), static_cast<unsigned long>(e.multiplicity(j)));
        t *= pw;
      }
      v += t;
    }
    return v;
  }

  /// "2*x1^2*x2 - x1 + 3", terms in descending graded-lex order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      Rational mag = abs(c);
      if (s.empty())
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      const std::string mono = monomial_text(e);
      if (mono.empty())
        s += mag.get_str();
      else if (mag == 1)
        s += mono;
      else
        s += mag.get_str() + "*" + mono;
    }
    return s;
  }

  /// "x1^2*x3", empty for the constant monomial.
  static std::string monomial_text(const Partition& e) {
    std::string s;
    for (int j = 1; j <= e.max_part(); ++j) {
      const int m = e.multiplicity(j);
      if (m == 0) continue;
      if (!s.empty()) s += '*';
      s += "x" + std::to_string(j);
      if (m != 1) s += "^" + std::to_string(m);
    }
    return s;
  }

  /// Parses sums/products/powers of rationals and variables x<j>, with
  /// parentheses.  Accepts everything to_string produces.
  static Poly parse(std::string_view text);

private:
  void add_term(const Partition& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    nvars_ = std::max(nvars_, e.max_part());
  }

  Terms terms_;
  int nvars_ = 0;
};

namespace detail {

class PolyParser {
public:
  PolyParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  Poly parse_all() {
    Poly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  Poly parse_sum() {
    skip_ws();
    Poly acc;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = parse_product();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += parse_product();
      } else if (peek('-')) {
        ++pos_;
        acc -= parse_product();
      } else {
        break;
      }
    }
    return acc;
  }

  std::size_t position() const { return pos_; }

private:
  Poly parse_product() {
    Poly acc = parse_power();
    while (true) {
      skip_ws();
      if (peek('*')) {
        ++pos_;
        acc *= parse_power();
      } else if (peek('/')) {
        ++pos_;
        skip_ws();
        const Integer den = read_integer();
        if (den == 0) fail("division by zero");
        const Rational reciprocal(Integer(1), den);
        acc = reciprocal * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_power() {
    Poly base = parse_atom();
    skip_ws();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const Integer e = read_integer();
      if (e < 0 || e > 10000) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Poly inner = parse_sum();
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == 'x') {
      ++pos_;
      const Integer j = read_integer();
      if (j < 1 || j > 64) fail("variable index out of range");
      return Poly::variable(static_cast<int>(j.get_si()));
    }
    if (ch == '-') {
      ++pos_;
      return -parse_power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Poly(Rational(read_integer()));
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Integer read_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Poly Poly::parse(std::string_view text) { return detail::PolyParser(text, 0).parse_all(); }

} // namespace hyperwreath
