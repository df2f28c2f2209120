#pragma once

// The iterated wreath product W_n of n copies of Z with polynomial layers.
//
// An element is a tuple (f_0, ..., f_{n-1}) where f_{k-1} is an integral
// polynomial in x_1..x_{k-1}; it is written f_{k-1} D_k in layer k.  W_n acts
// on the right of Z^n by
//
//   (x_1, ..., x_n) . g = (x_1 - f_0, x_2 - f_1(x_1), ..., x_n - f_{n-1}(x_1..x_{n-1}))
//
// and the product is fixed by x.(gh) = (x.g).h.  Commutators are
// [a, b] = a^-1 b^-1 a b.

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordinals.hpp"
#include "partitions.hpp"
#include "polyring.hpp"

namespace hyperwreath {

/// x^Lambda D_k with coefficient 1: an element of the basis B.
struct MonicMonomial {
  Partition lambda;
  int layer = 1;

  friend std::strong_ordering operator<=>(const MonicMonomial& a, const MonicMonomial& b) {
    if (auto c = a.layer <=> b.layer; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
  friend bool operator==(const MonicMonomial&, const MonicMonomial&) = default;

  bool well_formed(int n) const { return layer >= 1 && layer <= n && lambda.max_part() <= layer - 1; }
  Ordinal tdeg(int n) const { return tdeg_of_monomial(lambda, layer, n); }
  std::string to_string() const;
};

/// c x^Lambda D_k with c a non-zero integer.
struct MonomialElement {
  Integer coeff{1};
  Partition lambda;
  int layer = 1;

  MonomialElement() = default;
  MonomialElement(Integer c, Partition l, int k) : coeff(std::move(c)), lambda(std::move(l)), layer(k) {
    if (coeff == 0) throw std::invalid_argument("MonomialElement: zero coefficient");
    if (layer < 1) throw std::invalid_argument("MonomialElement: layer must be >= 1");
    if (lambda.max_part() > layer - 1)
      throw std::invalid_argument("MonomialElement: x^" + lambda.to_string() + " not allowed in layer " +
                                  std::to_string(layer));
  }
  explicit MonomialElement(const MonicMonomial& m) : MonomialElement(1, m.lambda, m.layer) {}

  bool monic() const { return coeff == 1; }
  MonicMonomial monic_part() const { return {lambda, layer}; }
  Ordinal tdeg(int n) const { return tdeg_of_monomial(lambda, layer, n); }
  Poly poly() const { return Poly::monomial(lambda, Rational(coeff)); }

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;

  /// "[2*x1^2]D4"
  std::string to_string() const { return "[" + poly().to_string() + "]D" + std::to_string(layer); }
};

inline std::string MonicMonomial::to_string() const { return MonomialElement(*this).to_string(); }

class GroupElement {
public:
  GroupElement() = default;

  static GroupElement identity(int n) {
    if (n < 1) throw std::invalid_argument("GroupElement: n must be >= 1");
    GroupElement g;
    g.n_ = n;
    g.layers_.assign(n, Poly());
    return g;
  }

  /// f_{k-1} := layers[k-1]; every layer checked for integrality and variables.
  static GroupElement from_layers(int n, std::vector<Poly> layers) {
    GroupElement g = identity(n);
    if (static_cast<int>(layers.size()) != n)
      throw std::invalid_argument("GroupElement: expected " + std::to_string(n) + " layers");
    for (int k = 1; k <= n; ++k) check_layer(k, layers[k - 1]);
    g.layers_ = std::move(layers);
    return g;
  }

  /// f D_k
  static GroupElement base(int n, int k, Poly f) {
    if (k < 1 || k > n) throw std::invalid_argument("GroupElement::base: layer out of range");
    check_layer(k, f);
    GroupElement g = identity(n);
    g.layers_[k - 1] = std::move(f);
    return g;
  }

  static GroupElement from_monomial(int n, const MonomialElement& m) { return base(n, m.layer, m.poly()); }

  /// D_k
  static GroupElement delta(int n, int k) { return base(n, k, Poly(1)); }

  int n() const { return n_; }

  /// f_{k-1}, the polynomial in layer k (1-based).
  const Poly& layer(int k) const { return layers_.at(k - 1); }
  std::span<const Poly> layers() const { return layers_; }

  bool is_identity() const {
    return std::all_of(layers_.begin(), layers_.end(), [](const Poly& p) { return p.is_zero(); });
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.n_ == b.n_ && a.layers_ == b.layers_;
  }

  std::vector<Integer> act(std::span<const Integer> x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("act: point has wrong length");
    std::vector<Integer> out(x.begin(), x.end());
    for (int k = 1; k <= n_; ++k) {
      const Rational v = layers_[k - 1].evaluate(x.first(k - 1));
      out[k - 1] -= v.get_num();
    }
    return out;
  }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    require_same_n(g, h);
    const int n = g.n_;
    // y_i = x_i - g_{i-1}(x): the image of x under g
    std::vector<Poly> y;
    y.reserve(n);
    for (int i = 1; i <= n; ++i) y.push_back(Poly::variable(i) - g.layers_[i - 1]);
    GroupElement r = identity(n);
    for (int k = 1; k <= n; ++k) {
      const Poly& hk = h.layers_[k - 1];
      r.layers_[k - 1] = g.layers_[k - 1] + (hk.is_constant() ? hk : hk.substitute(y));
    }
    return r;
  }

  GroupElement& operator*=(const GroupElement& h) { return *this = *this * h; }

  GroupElement inverse() const {
    // x_i(y) = y_i + g_{i-1}(x_1(y), ..., x_{i-1}(y)) undoes the action of g;
    // the inverse has layers -g_{k-1}(x(y)).
    std::vector<Poly> x;
    x.reserve(n_);
    GroupElement r = identity(n_);
    for (int k = 1; k <= n_; ++k) {
      const Poly& gk = layers_[k - 1];
      Poly composed = gk.is_constant() ? gk : gk.substitute(x);
      x.push_back(Poly::variable(k) + composed);
      r.layers_[k - 1] = -composed;
    }
    return r;
  }

  /// g^m for any integer m.
  GroupElement pow(long m) const {
    GroupElement base_el = m < 0 ? inverse() : *this;
    unsigned long e = m < 0 ? static_cast<unsigned long>(-(m + 1)) + 1UL : static_cast<unsigned long>(m);
    GroupElement result = identity(n_);
    while (e) {
      if (e & 1UL) result *= base_el;
      e >>= 1UL;
      if (e) base_el *= base_el;
    }
    return result;
  }

  /// Canonical text: non-trivial layers in descending order, e.g.
  /// "[x1^2 + 1]D4 * [x1]D2 * [3]D1"; the identity is "1".
  std::string to_string() const {
    std::string s;
    for (int k = n_; k >= 1; --k) {
      if (layers_[k - 1].is_zero()) continue;
      if (!s.empty()) s += " * ";
      s += "[" + layers_[k - 1].to_string() + "]D" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
  }

  /// Parses a '*'-separated product of "[poly]Dk" factors (or "1").
  static GroupElement parse(std::string_view text, int n);

private:
  static void check_layer(int k, const Poly& f) {
    if (!f.is_integral()) throw std::domain_error("layer " + std::to_string(k) + " is not integral: " + f.to_string());
    if (f.used_vars() > k - 1)
      throw std::invalid_argument("layer " + std::to_string(k) + " may only use x1..x" + std::to_string(k - 1) +
                                  ", got " + f.to_string());
  }
  static void require_same_n(const GroupElement& a, const GroupElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("group elements from W_" + std::to_string(a.n_) + " and W_" +
                                                  std::to_string(b.n_));
  }

  int n_ = 0;
  std::vector<Poly> layers_;
};

inline GroupElement comm(const GroupElement& a, const GroupElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

/// a^b = b^-1 a b
inline GroupElement conj(const GroupElement& a, const GroupElement& b) { return b.inverse() * a * b; }

/// d * (prod f_k D_k) = prod (d f_k) D_k
inline GroupElement scalar_mul(const Integer& d, const GroupElement& g) {
  std::vector<Poly> layers(g.layers().begin(), g.layers().end());
  for (Poly& p : layers) p = Rational(d) * p;
  return GroupElement::from_layers(g.n(), std::move(layers));
}

/// Closed form of [f D_k, g D_u]:
///   (Delta_u(g) f) D_k     if k > u
///  -(Delta_k(f) g) D_u     if u > k
///   identity               if k = u
inline GroupElement comm_formula(const Poly& f, int k, const Poly& g, int u, int n) {
  if (k < 1 || k > n || u < 1 || u > n) throw std::invalid_argument("comm_formula: layer out of range");
  if (f.used_vars() > k - 1 || g.used_vars() > u - 1)
    throw std::invalid_argument("comm_formula: polynomial uses variables outside its layer");
  if (k == u) return GroupElement::identity(n);
  if (k > u) return GroupElement::base(n, k, f.difference(u, g));
  return GroupElement::base(n, u, -g.difference(k, f));
}

/// [f D_k, g D_u] for u < k via the Taylor expansion
///   sum_{s>=1} (1/s!) d^s f / dx_u^s * g^s,
/// evaluated over Q and then required to be integral.
inline GroupElement taylor_comm(const Poly& f, int k, const Poly& g, int u, int n) {
  if (!(u < k)) throw std::invalid_argument("taylor_comm: requires u < k");
  if (k > n || u < 1) throw std::invalid_argument("taylor_comm: layer out of range");
  if (!f.is_integral() || !g.is_integral()) throw std::invalid_argument("taylor_comm: integral inputs required");
  Poly sum;
  Poly derivative = f;
  Poly g_power(1);
  Integer factorial = 1;
  for (int s = 1; s <= f.degree_in(u); ++s) {
    derivative = derivative.partial_derivative(u);
    g_power *= g;
    factorial *= s;
    sum += Rational(Integer(1), factorial) * (derivative * g_power);
  }
  if (!sum.is_integral()) throw std::logic_error("taylor_comm: non-integral result " + sum.to_string());
  return GroupElement::base(n, k, sum);
}

/// All monomial constituents c x^Lambda D_k of g, strictly descending in tdeg.
inline std::vector<MonomialElement> decompose(const GroupElement& g) {
  std::vector<std::pair<Ordinal, MonomialElement>> items;
  for (int k = 1; k <= g.n(); ++k)
    for (const auto& [e, c] : g.layer(k).terms()) {
      MonomialElement m(c.get_num(), e, k);
      items.emplace_back(m.tdeg(g.n()), std::move(m));
    }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<MonomialElement> out;
  out.reserve(items.size());
  for (auto& [t, m] : items) out.push_back(std::move(m));
  return out;
}

/// Inverse of decompose: collect constituents per layer and multiply the
/// layer parts in descending layer order.
inline GroupElement reassemble(int n, std::span<const MonomialElement> parts) {
  std::vector<Poly> layers(n);
  for (const MonomialElement& m : parts) {
    if (m.layer > n) throw std::invalid_argument("reassemble: layer beyond n");
    layers[m.layer - 1] += m.poly();
  }
  GroupElement r = GroupElement::identity(n);
  for (int k = n; k >= 1; --k) r *= GroupElement::base(n, k, layers[k - 1]);
  return r;
}

/// Transfinite degree; 0 for the identity.
inline Ordinal tdeg(const GroupElement& g) {
  Ordinal best;
  for (int k = 1; k <= g.n(); ++k)
    for (const auto& [e, c] : g.layer(k).terms()) best = std::max(best, tdeg_of_monomial(e, k, g.n()));
  return best;
}

/// M(g), the constituent of maximal transfinite degree.
inline MonomialElement leading_term(const GroupElement& g) {
  if (g.is_identity()) throw std::invalid_argument("leading_term: identity has no leading term");
  std::optional<std::pair<Ordinal, MonomialElement>> best;
  for (int k = 1; k <= g.n(); ++k)
    for (const auto& [e, c] : g.layer(k).terms()) {
      Ordinal t = tdeg_of_monomial(e, k, g.n());
      if (!best || t > best->first) best.emplace(std::move(t), MonomialElement(c.get_num(), e, k));
    }
  return best->second;
}

/// M([x^Lambda D_k, x^Theta D_u]) = (d x^Lambda / dx_u) x^Theta D_k for k > u,
/// i.e. lambda_u x^{Lambda - e_u + Theta} D_k.  nullopt when lambda_u = 0 (the
/// commutator is trivial).
inline std::optional<MonomialElement> leading_of_monomial_comm(const Partition& lambda, int k,
                                                               const Partition& theta, int u) {
  if (!(k > u) || u < 1) throw std::invalid_argument("leading_of_monomial_comm: requires k > u >= 1");
  if (lambda.max_part() > k - 1 || theta.max_part() > u - 1)
    throw std::invalid_argument("leading_of_monomial_comm: ill-formed monomial");
  const int lu = lambda.multiplicity(u);
  if (lu == 0) return std::nullopt;
  return MonomialElement(lu, lambda.adjusted(u, -1) + theta, k);
}

namespace detail {

inline void skip_ws(std::string_view t, std::size_t& pos) {
  while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t' || t[pos] == '\n')) ++pos;
}

/// One "[poly]Dk" factor starting at pos; advances pos past it.
inline GroupElement parse_element_factor(std::string_view text, std::size_t& pos, int n) {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  const std::size_t close = text.find(']', pos);
  if (close == std::string_view::npos) throw ParseError("unterminated '['", pos);
  const std::size_t body = pos + 1;
  Poly f = PolyParser(text.substr(body, close - body), body).parse_all();
  pos = close + 1;
  if (pos >= text.size() || text[pos] != 'D') throw ParseError("expected 'D' after ']'", pos);
  ++pos;
  const std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (start == pos) throw ParseError("expected layer index", start);
  const int k = std::stoi(std::string(text.substr(start, pos - start)));
  if (k < 1 || k > n) throw ParseError("layer D" + std::to_string(k) + " outside W_" + std::to_string(n), start);
  try {
    return GroupElement::base(n, k, std::move(f));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), start);
  }
}

} // namespace detail

inline GroupElement GroupElement::parse(std::string_view text, int n) {
  std::size_t pos = 0;
  detail::skip_ws(text, pos);
  GroupElement g = identity(n);
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    detail::skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("unexpected text after identity", pos);
    return g;
  }
  while (true) {
    g *= detail::parse_element_factor(text, pos, n);
    detail::skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
  }
  return g;
}

} // namespace hyperwreath
