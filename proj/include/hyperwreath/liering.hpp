#pragma once

// The Lie ring L_n: free Z-module on x^Lambda d_k (Lambda with parts <= k-1),
// with the bracket
//
//   [x^L d_k, x^T d_j] =  d_j(x^L) x^T d_k    if j < k
//                      = -x^L d_k(x^T) d_j    if j > k
//                      =  0                   if j = k
//
// and the leading-term correspondence phi : W_n -> L_n.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ordinals.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "wreath.hpp"

namespace hyperwreath {

/// Basis element x^Lambda d_k.
struct LieBasis {
  Partition lambda;
  int layer = 1;

  friend std::strong_ordering operator<=>(const LieBasis& a, const LieBasis& b) {
    if (auto c = a.layer <=> b.layer; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
  friend bool operator==(const LieBasis&, const LieBasis&) = default;

  bool well_formed(int n) const { return layer >= 1 && layer <= n && lambda.max_part() <= layer - 1; }
  std::string to_string() const;
};

inline Ordinal tdeg_lie(const LieBasis& b, int n) { return tdeg_of_monomial(b.lambda, b.layer, n); }

class LieElement {
public:
  using Terms = std::map<LieBasis, Integer>;

  LieElement() = default;
  explicit LieElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("LieElement: n must be >= 1");
  }

  static LieElement basis(int n, const LieBasis& b, const Integer& coeff = 1) {
    if (!b.well_formed(n))
      throw std::invalid_argument("LieElement: x^" + b.lambda.to_string() + " d" + std::to_string(b.layer) +
                                  " is not a basis element of L_" + std::to_string(n));
    LieElement e(n);
    e.add(b, coeff);
    return e;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const LieBasis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const LieBasis& b, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const LieElement& a, const LieElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  friend LieElement operator+(LieElement a, const LieElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("LieElement: mismatched n");
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend LieElement operator-(LieElement a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend LieElement operator-(const LieElement& a, const LieElement& b) { return a + (-b); }
  friend LieElement operator*(const Integer& s, LieElement a) {
    if (s == 0) return LieElement(a.n_);
    for (auto& [k, c] : a.terms_) c *= s;
    return a;
  }

  /// "2*x1^2 d3 + x2 d4", descending transfinite degree.
  std::string to_string() const;

  static LieElement parse(std::string_view text, int n);

private:
  int n_ = 0;
  Terms terms_;
};

/// Bracket of two basis elements; the product coefficient times a basis
/// element, or nothing.
inline std::optional<std::pair<Integer, LieBasis>> bracket_basis(const LieBasis& a, const LieBasis& b) {
  if (a.layer == b.layer) return std::nullopt;
  if (b.layer < a.layer) {
    const int m = a.lambda.multiplicity(b.layer);
    if (m == 0) return std::nullopt;
    return std::pair{Integer(m), LieBasis{a.lambda.adjusted(b.layer, -1) + b.lambda, a.layer}};
  }
  const int m = b.lambda.multiplicity(a.layer);
  if (m == 0) return std::nullopt;
  return std::pair{Integer(-m), LieBasis{a.lambda + b.lambda.adjusted(a.layer, -1), b.layer}};
}

inline LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("bracket: mismatched n");
  LieElement r(a.n());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      if (auto t = bracket_basis(ka, kb)) r.add(t->second, ca * cb * t->first);
  return r;
}

/// phi(1) = 0; otherwise c x^Lambda d_k where c x^Lambda D_k = M(g).
inline LieElement phi(const GroupElement& g) {
  if (g.is_identity()) return LieElement(g.n());
  const MonomialElement m = leading_term(g);
  return LieElement::basis(g.n(), LieBasis{m.lambda, m.layer}, m.coeff);
}

inline LieBasis phi_basis(const MonicMonomial& m) { return {m.lambda, m.layer}; }

inline std::set<LieBasis> phi_set(const std::set<MonicMonomial>& basis) {
  std::set<LieBasis> out;
  for (const MonicMonomial& m : basis) out.insert(phi_basis(m));
  return out;
}

inline std::string LieBasis::to_string() const { return LieElement::basis(layer, *this).to_string(); }

inline std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  // descending transfinite degree
  std::vector<std::pair<Ordinal, const std::pair<const LieBasis, Integer>*>> order;
  for (const auto& t : terms_) order.emplace_back(tdeg_of_monomial(t.first.lambda, t.first.layer, n_), &t);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::string s;
  for (const auto& [t, term] : order) {
    const auto& [b, c] = *term;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const std::string mono = Poly::monomial_text(b.lambda);
    if (mono.empty())
      s += (mag == 1 ? "" : mag.get_str() + " ") + "d" + std::to_string(b.layer);
    else
      s += (mag == 1 ? "" : mag.get_str() + "*") + mono + " d" + std::to_string(b.layer);
  }
  return s;
}

inline LieElement LieElement::parse(std::string_view text, int n) {
  LieElement r(n);
  std::size_t pos = 0;
  detail::skip_ws(text, pos);
  if (text.substr(pos) == "0") return r;
  bool first = true;
  while (true) {
    detail::skip_ws(text, pos);
    if (pos >= text.size()) {
      if (first) throw ParseError("empty Lie element", pos);
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    const std::size_t d = text.find('d', pos);
    if (d == std::string_view::npos) throw ParseError("expected 'd<k>'", pos);
    std::string_view coeff_text = text.substr(pos, d - pos);
    while (!coeff_text.empty() && coeff_text.back() == ' ') coeff_text.remove_suffix(1);
    std::size_t lead = 0;
    while (lead < coeff_text.size() && coeff_text[lead] == ' ') ++lead;
    coeff_text.remove_prefix(lead);
    Poly mono(1);
    if (!coeff_text.empty()) mono = detail::PolyParser(coeff_text, pos + lead).parse_all();
    if (mono.terms().size() != 1 || !mono.is_integral()) throw ParseError("coefficient must be an integer monomial", pos);
    const auto& [lambda, c] = *mono.terms().begin();
    std::size_t kpos = d + 1;
    const std::size_t kstart = kpos;
    while (kpos < text.size() && text[kpos] >= '0' && text[kpos] <= '9') ++kpos;
    if (kstart == kpos) throw ParseError("expected layer index", kstart);
    const int k = std::stoi(std::string(text.substr(kstart, kpos - kstart)));
    const LieBasis b{lambda, k};
    if (!b.well_formed(n)) throw ParseError("not a basis element of L_" + std::to_string(n), kstart);
    r.add(b, negative ? Integer(-c.get_num()) : Integer(c.get_num()));
    pos = kpos;
    first = false;
  }
  return r;
}

} // namespace hyperwreath
