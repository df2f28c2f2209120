#include <gtest/gtest.h>

#include "hyperwreath/chains.hpp"
#include "hyperwreath/liering.hpp"
#include "hyperwreath/random.hpp"

using namespace hyperwreath;

namespace {

LieElement L(const char* text, int n) { return LieElement::parse(text, n); }
GroupElement E(const char* text, int n) { return GroupElement::parse(text, n); }

// Bracket from calculus: [f d_k, g d_j] = d_j(f) g d_k - f d_k(g) d_j, the
// negative of the usual vector-field bracket (it matches a^-1 b^-1 a b on the
// group side).  Uses partial derivatives, not exponent bookkeeping.
LieElement derivation_bracket(const LieElement& a, const LieElement& b, int n) {
  std::map<int, Poly> field;  // layer -> coefficient polynomial
  auto term_poly = [](const LieBasis& basis, const Integer& c) { return Poly::monomial(basis.lambda, Rational(c)); };
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const Poly f = term_poly(ka, ca), g = term_poly(kb, cb);
      field[ka.layer] += g * f.partial_derivative(kb.layer);
      field[kb.layer] -= f * g.partial_derivative(ka.layer);
    }
  LieElement out(n);
  for (const auto& [k, p] : field)
    for (const auto& [e, c] : p.terms()) out.add(LieBasis{e, k}, c.get_num());
  return out;
}

} // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(L("x1 d2", 2), L("d1", 2)), L("d2", 2));
  EXPECT_EQ(bracket(L("d1", 2), L("x1 d2", 2)), L("-d2", 2));
  const LieElement a = L("x1^2 d3 + 2*x2 d3 - d1", 3);
  EXPECT_TRUE(bracket(a, a).terms().empty());
}

TEST(Bracket, AgreesWithDerivationRule) {
  RandomSource rng(31);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 100; ++t) {
      LieElement a(n), b(n);
      for (int s = 0; s < 2; ++s) {
        a = a + phi(GroupElement::from_monomial(n, rng.monomial(n)));
        b = b + phi(GroupElement::from_monomial(n, rng.monomial(n)));
      }
      EXPECT_EQ(bracket(a, b), derivation_bracket(a, b, n)) << a.to_string() << " , " << b.to_string();
    }
}

TEST(Bracket, BilinearAlternatingJacobi) {
  RandomSource rng(32);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 100; ++t) {
      auto draw = [&] { return phi(GroupElement::from_monomial(n, rng.monomial(n))); };
      const LieElement a = draw(), b = draw(), c = draw();
      EXPECT_EQ(bracket(a + b, c), bracket(a, c) + bracket(b, c));
      EXPECT_EQ(bracket(Integer(3) * a, c), Integer(3) * bracket(a, c));
      EXPECT_EQ(bracket(a, b), -bracket(b, a));
      const LieElement j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
      EXPECT_TRUE(j.terms().empty());
    }
}

TEST(Bracket, LowersTdegAcrossLayers) {
  RandomSource rng(33);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 100; ++t) {
      const MonomialElement x = rng.monomial(n), y = rng.monomial(n);
      const LieBasis a{x.lambda, x.layer}, b{y.lambda, y.layer};
      if (const auto r = bracket_basis(a, b)) {
        EXPECT_LT(tdeg_lie(r->second, n), std::max(tdeg_lie(a, n), tdeg_lie(b, n)));
      }
    }
}

TEST(Phi, Examples) {
  EXPECT_TRUE(phi(GroupElement::identity(3)).terms().empty());
  EXPECT_EQ(phi(E("[x1^2]D3", 3)).to_string(), "x1^2 d3");
  EXPECT_EQ(phi(E("[x1]D2 * [1]D1", 2)).to_string(), "d1");
  EXPECT_EQ(phi(E("[-3*x1*x2 + x1]D3", 3)).to_string(), "-3*x1*x2 d3");
}

TEST(Phi, IntertwinesCommutatorAndBracket) {
  RandomSource rng(34);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 200; ++t) {
      const GroupElement g = GroupElement::from_monomial(n, rng.monomial(n));
      const GroupElement h = GroupElement::from_monomial(n, rng.monomial(n));
      EXPECT_EQ(phi(comm(g, h)), bracket(phi(g), phi(h))) << g.to_string() << " , " << h.to_string();
    }
}

TEST(PhiSet, Examples) {
  const auto t = phi_set(translation_set(3).basis);
  EXPECT_EQ(t, (std::set<LieBasis>{{Partition(), 1}, {Partition(), 2}, {Partition(), 3}}));
  EXPECT_EQ(phi_set(enumerate_N(0, 3).basis).size(), 6U);
  EXPECT_TRUE(phi_set({}).empty());
}

TEST(TdegLie, Examples) {
  EXPECT_TRUE(tdeg_lie({Partition(), 4}, 4).is_zero());
  EXPECT_EQ(tdeg_lie({Partition::from_parts({1}), 4}, 4), Ordinal::finite(1));
  EXPECT_EQ(tdeg_lie({Partition(), 3}, 4), Ordinal::omega_power(3));
}

TEST(LieText, RoundTrip) {
  EXPECT_EQ(L("x2 d4 + 2*x1^2 d3", 4).to_string(), "2*x1^2 d3 + x2 d4");
  EXPECT_EQ(L("2 d3", 3).to_string(), "2 d3");
  EXPECT_EQ(L("0", 3).to_string(), "0");
  RandomSource rng(35);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 50; ++t) {
      LieElement a(n);
      for (int s = 0; s < 3; ++s) a = a + phi(GroupElement::from_monomial(n, rng.monomial(n)));
      EXPECT_EQ(L(a.to_string().c_str(), n), a) << a.to_string();
    }
  EXPECT_THROW(L("x2 d2", 3), ParseError);
  EXPECT_THROW(L("x1/2 d2", 3), ParseError);
  EXPECT_THROW(L("x1 d2 x1 d3", 3), ParseError);
}
