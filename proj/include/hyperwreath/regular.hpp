#pragma once

// The regular abelian subgroups T_c = <t_1, D_2, ..., D_n> of N_0 with
// t_1 = D_1 (c x_1 D_n), i.e. t_1 has layers (1, 0, ..., 0, c x_1).

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chains.hpp"
#include "wreath.hpp"

namespace hyperwreath {

struct RegularFamily {
  int n = 0;
  std::optional<Integer> c;  // set for the parametric family T_c
  std::vector<GroupElement> generators;
};

inline RegularFamily make_family(const Integer& c, int n) {
  if (n < 2) throw std::invalid_argument("make_family: n must be >= 2");
  RegularFamily f{n, c, {}};
  // (c x_1 D_n) * D_1 has layers (1, 0, ..., c x_1)
  f.generators.push_back(GroupElement::base(n, n, Rational(c) * Poly::variable(1)) * GroupElement::delta(n, 1));
  for (int k = 2; k <= n; ++k) f.generators.push_back(GroupElement::delta(n, k));
  return f;
}

inline bool is_abelian(const RegularFamily& f) {
  for (std::size_t a = 0; a < f.generators.size(); ++a)
    for (std::size_t b = a + 1; b < f.generators.size(); ++b)
      if (!comm(f.generators[a], f.generators[b]).is_identity()) return false;
  return true;
}

/// Exponents m with g = t_1^{m_1} ... t_n^{m_n}, read off layer by layer.
/// Needs generator i to have trivial layers below i and layer i equal to 1.
inline std::optional<std::vector<Integer>> membership_solve(const GroupElement& g, const RegularFamily& f) {
  const int n = f.n;
  if (g.n() != n) throw std::invalid_argument("membership_solve: mismatched n");
  if (static_cast<int>(f.generators.size()) != n)
    throw std::invalid_argument("membership_solve: family needs n generators");
  for (int i = 1; i <= n; ++i) {
    const GroupElement& t = f.generators[i - 1];
    for (int k = 1; k < i; ++k)
      if (!t.layer(k).is_zero()) throw std::invalid_argument("membership_solve: generators not unitriangular");
    if (!(t.layer(i) == Poly(1))) throw std::invalid_argument("membership_solve: generators not unitriangular");
  }
  std::vector<Integer> m(n);
  GroupElement residual = g;
  for (int i = 1; i <= n; ++i) {
    const Poly& f_i = residual.layer(i);
    if (!f_i.is_constant()) return std::nullopt;
    m[i - 1] = f_i.constant_term().get_num();
    if (!m[i - 1].fits_slong_p()) return std::nullopt;
    residual = f.generators[i - 1].pow(-m[i - 1].get_si()) * residual;
  }
  if (!residual.is_identity()) return std::nullopt;
  GroupElement check = GroupElement::identity(n);
  for (int i = 1; i <= n; ++i) check *= f.generators[i - 1].pow(m[i - 1].get_si());
  if (!(check == g)) return std::nullopt;
  return m;
}

/// t^s and t^{s^-1} stay in the family for every generator t and every
/// generator s of N_0.
inline bool is_normal_in_N0(const RegularFamily& f) {
  const SaturatedSet n0 = enumerate_N(0, f.n);
  for (const MonicMonomial& sm : n0.basis) {
    const GroupElement s = GroupElement::from_monomial(f.n, MonomialElement(sm));
    const GroupElement s_inv = s.inverse();
    for (const GroupElement& t : f.generators) {
      if (!membership_solve(conj(t, s), f)) return false;
      if (!membership_solve(conj(t, s_inv), f)) return false;
    }
  }
  return true;
}

/// m in [-radius, radius]^n -> 0 . (t_1^{m_1} ... t_n^{m_n}) is injective.
inline bool orbit_injectivity(const RegularFamily& f, int radius) {
  if (radius < 1) throw std::invalid_argument("orbit_injectivity: radius must be >= 1");
  const int n = f.n;
  const std::vector<Integer> origin(n, 0);
  // powers[i][m + radius] = t_i^m
  std::vector<std::vector<GroupElement>> powers(f.generators.size());
  for (std::size_t i = 0; i < f.generators.size(); ++i)
    for (int m = -radius; m <= radius; ++m) powers[i].push_back(f.generators[i].pow(m));
  std::set<std::vector<Integer>> seen;
  std::vector<int> idx(f.generators.size(), 0);
  while (true) {
    GroupElement g = GroupElement::identity(n);
    for (std::size_t i = 0; i < idx.size(); ++i) g *= powers[i][idx[i]];
    if (!seen.insert(g.act(origin)).second) return false;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == 2 * radius + 1) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return true;
}

/// Conjugates every generator by g = d x_1^2 D_n as t -> g t g^-1.
inline RegularFamily conjugate_family(const RegularFamily& f, const Integer& d) {
  const int n = f.n;
  const GroupElement g = GroupElement::base(n, n, Rational(d) * Poly::variable(1).pow(2));
  const GroupElement g_inv = g.inverse();
  RegularFamily out{n, std::nullopt, {}};
  for (const GroupElement& t : f.generators) out.generators.push_back(g * t * g_inv);
  return out;
}

/// Same subgroup: every generator of each family solves in the other.
inline bool same_group(const RegularFamily& a, const RegularFamily& b) {
  for (const GroupElement& t : a.generators)
    if (!membership_solve(t, b)) return false;
  for (const GroupElement& t : b.generators)
    if (!membership_solve(t, a)) return false;
  return true;
}

/// The c with <family> = T_c, if any.  The candidate is read from the
/// coefficient of x_1 in the top layer of the first generator.
inline std::optional<Integer> family_parameter(const RegularFamily& f) {
  if (f.generators.empty()) return std::nullopt;
  const Integer c = f.generators.front().layer(f.n).coefficient(Partition::unit(1)).get_num();
  try {
    if (same_group(f, make_family(c, f.n))) return c;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

} // namespace hyperwreath
