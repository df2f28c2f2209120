#include <gtest/gtest.h>

#include <cmath>

#include "hyperwreath/chains.hpp"
#include "hyperwreath/random.hpp"

using namespace hyperwreath;

namespace {

MonicMonomial M(std::initializer_list<int> parts, int k) { return {Partition::from_parts(parts), k}; }
GroupElement E(const char* text, int n) { return GroupElement::parse(text, n); }

int h_oracle(int i, int n) { return static_cast<int>(std::floor(double(i - 1) / double(n - 1))) + 1; }

// N_i by brute force: every monic monomial of bounded weight whose level at
// some j <= i equals j, plus D_1..D_n.
std::set<MonicMonomial> n_oracle(int i, int n) {
  std::set<MonicMonomial> out;
  for (int k = 1; k <= n; ++k) out.insert({Partition(), k});
  const int wt_max = 2 * (i + 1) + 2;
  for (int k = 1; k <= n; ++k)
    for (int w = 0; w <= wt_max; ++w)
      for (const Partition& p : enumerate_partitions(w, std::nullopt, k - 1)) {
        const int deg = static_cast<int>(p.parts().size());
        const int wdd_v = w - deg + n - k;
        for (int j = 0; j <= i; ++j)
          if (h_oracle(j, n) * wdd_v + deg - 1 == j) out.insert({p, k});
      }
  return out;
}

} // namespace

TEST(Levels, Examples) {
  EXPECT_EQ(h_func(1, 4), 1);
  EXPECT_EQ(h_func(4, 4), 2);
  EXPECT_EQ(r_func(4, 4), 1);
  EXPECT_EQ(h_func(0, 4), 0);
  EXPECT_EQ(wdd(M({}, 4), 4), 0);
  EXPECT_EQ(wdd(M({1}, 2), 4), 2);
  EXPECT_EQ(lev(1, M({1, 1}, 4), 4), 1);
  EXPECT_THROW(r_func(0, 4), std::invalid_argument);
  EXPECT_THROW(h_func(1, 1), std::invalid_argument);
}

TEST(Levels, MatchFloorOracle) {
  for (int n = 2; n <= 6; ++n)
    for (int i = -10; i <= 30; ++i) {
      EXPECT_EQ(h_func(i, n), h_oracle(i, n));
      if (i >= 1) {
        const int r = r_func(i, n);
        EXPECT_GE(r, 1);
        EXPECT_LE(r, n - 1);
        EXPECT_EQ((i - r) % (n - 1), 0);
      }
    }
}

TEST(EnumerateN, Examples) {
  EXPECT_EQ(enumerate_N(-1, 4).basis, translation_set(4).basis);
  const SaturatedSet n0 = enumerate_N(0, 4);
  EXPECT_EQ(n0.basis.size(), 10U);
  for (int k = 2; k <= 4; ++k)
    for (int j = 1; j < k; ++j) EXPECT_TRUE(n0.contains(MonicMonomial{Partition::unit(j), k}));
  EXPECT_EQ(enumerate_L(1, 4), (std::set<MonicMonomial>{M({1, 1}, 4)}));
}

TEST(EnumerateN, MatchesBruteForce) {
  for (int n = 2; n <= 5; ++n)
    for (int i = -1; i <= 8; ++i) EXPECT_EQ(enumerate_N(i, n).basis, n_oracle(i, n)) << "n=" << n << " i=" << i;
}

TEST(EnumerateN, NestedAndLevelsDisjoint) {
  for (int n = 2; n <= 5; ++n) {
    std::set<MonicMonomial> unioned = enumerate_N(0, n).basis;
    for (int i = 1; i <= 12; ++i) {
      const auto prev = enumerate_N(i - 1, n).basis;
      const auto cur = enumerate_N(i, n).basis;
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      for (const MonicMonomial& m : enumerate_L(i, n)) {
        EXPECT_TRUE(m.well_formed(n));
        EXPECT_TRUE(unioned.insert(m).second) << "L sets overlap at " << m.to_string();
      }
      EXPECT_EQ(unioned, cur);
    }
  }
}

TEST(EnumerateN, RejectsBadArguments) {
  EXPECT_THROW(enumerate_N(-2, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_N(0, 1), std::invalid_argument);
}

TEST(LayerCounts, Examples) {
  const auto one = layer_counts(1, 4);
  EXPECT_EQ(one.at(4), 1U);
  EXPECT_EQ(one.at(1) + one.at(2) + one.at(3), 0U);
  std::uint64_t total = 0;
  for (const auto& [k, c] : layer_counts(5, 4)) total += c;
  EXPECT_EQ(total, 3U);
  const auto five = layer_counts(5, 5);
  EXPECT_EQ(five.at(5), 1U);
  for (int k = 1; k < 5; ++k) EXPECT_EQ(five.at(k), 0U);
}

TEST(Growth, AboveThresholdRowsMatch) {
  for (int n : {4, 5}) {
    const ChainReport rep = verify_growth(n, 12);
    EXPECT_TRUE(rep.all_match());
    ASSERT_EQ(rep.rows.size(), 12U);
    for (const ChainRow& row : rep.rows) {
      EXPECT_EQ(row.checked, row.i > (n - 4) * (n - 1));
      if (row.checked) {
        EXPECT_TRUE(row.match) << "n=" << n << " i=" << row.i;
      }
    }
  }
}

TEST(Growth, PredictionsUsePartitionSums) {
  // c_0..c_3 = 1, 3, 7, 14 and b_{r+k-n-1} per layer, spelled out for n = 4
  const ChainReport rep = verify_growth(4, 6);
  const std::vector<std::uint64_t> totals{1, 3, 7, 1, 3, 7};
  for (std::size_t idx = 0; idx < rep.rows.size(); ++idx) {
    EXPECT_EQ(rep.rows[idx].predicted_total, totals[idx]);
    EXPECT_EQ(rep.rows[idx].total, totals[idx]);
  }
  EXPECT_EQ(rep.rows[2].predicted, (std::map<int, std::uint64_t>{{1, 0}, {2, 1}, {3, 2}, {4, 4}}));
}

TEST(Growth, TwoLayerChainIsConsistent) {
  const ChainReport rep = verify_growth(2, 6);
  EXPECT_TRUE(rep.all_match());
  for (const ChainRow& row : rep.rows) {
    ASSERT_EQ(row.generators.size(), 1U);
    EXPECT_EQ(row.generators.front(), (MonicMonomial{Partition::unit(1, row.i + 1), 2}));
  }
}

TEST(Closure, Examples) {
  const SaturatedSet t = saturated_closure(translation_set(3), 0);
  EXPECT_EQ(t.basis, translation_set(3).basis);
  const SaturatedSet n0 = saturated_closure(enumerate_N(0, 3), 6);
  EXPECT_EQ(n0.basis, enumerate_N(0, 3).basis);
  EXPECT_EQ(n0.discards, 0U);
  SaturatedSet two{2, {M({1}, 2), M({}, 1)}, -1, 0};
  const SaturatedSet closed = saturated_closure(two, 1);
  EXPECT_TRUE(closed.contains(M({}, 2)));
  EXPECT_EQ(closed.basis.size(), 3U);
}

TEST(Closure, CountsDiscardsAndRejectsSmallBounds) {
  // [x1^2 D2, D1] has constituents x1 D2 and D2; both fit at bound 2
  SaturatedSet s{2, {M({1, 1}, 2), M({}, 1)}, -1, 0};
  EXPECT_EQ(saturated_closure(s, 2).discards, 0U);
  EXPECT_THROW(saturated_closure(s, 1), std::invalid_argument);
  // [x1 D3, x2 D3] is trivial but [x2 D3, x1 D2] gives x1 D3 within bound
  SaturatedSet three{3, {M({2}, 3), M({1}, 2)}, -1, 0};
  const SaturatedSet c = saturated_closure(three, 2);
  EXPECT_TRUE(c.contains(M({1}, 3)));
}

TEST(Closure, DiscardsAreReported) {
  // [x2^2 D3, x1^3 D2] = (2 x1^3 x2 + x1^6) D3, weights 5 and 6
  const SaturatedSet s{3, {M({2, 2}, 3), M({1, 1, 1}, 2)}, -1, 0};
  const SaturatedSet cut = saturated_closure(s, 4);
  EXPECT_EQ(cut.discards, 2U);
  EXPECT_FALSE(cut.complete());
  EXPECT_EQ(cut.basis, s.basis);
  const SaturatedSet full = saturated_closure(s, 6);
  EXPECT_EQ(full.discards, 0U);
  EXPECT_TRUE(full.contains(M({2, 1, 1, 1}, 3)));
  EXPECT_TRUE(full.contains(M({1, 1, 1, 1, 1, 1}, 3)));
}

TEST(Normalizes, Examples) {
  SaturatedSet any = saturated_closure(enumerate_N(0, 4), 6);
  EXPECT_EQ(normalizes(M({}, 4), any), Verdict::yes);
  EXPECT_EQ(normalizes(M({1, 1}, 4), any), Verdict::yes);
  EXPECT_EQ(normalizes(M({1, 1, 1}, 4), any), Verdict::no);
  EXPECT_THROW(normalizes(M({}, 4), enumerate_N(0, 4)), std::invalid_argument);
}

TEST(Normalizes, UnknownOnlyBeyondTheBound) {
  const SaturatedSet s{3, {M({2, 2}, 3), M({1, 1, 1}, 2)}, -1, 0};
  const SaturatedSet cut = saturated_closure(s, 4);
  EXPECT_EQ(normalizes(M({2, 2}, 3), cut), Verdict::unknown);
  // below the bound the answer stays definite
  EXPECT_EQ(normalizes(M({}, 3), cut), Verdict::yes);
  EXPECT_EQ(normalizes(M({}, 1), cut), Verdict::no);
  EXPECT_STREQ(to_string(Verdict::unknown), "unknown");
}

TEST(Idealizes, Examples) {
  const auto ideal = phi_set(saturated_closure(enumerate_N(0, 4), 6).basis);
  EXPECT_TRUE(idealizes({Partition(), 4}, ideal));
  EXPECT_TRUE(idealizes({Partition::from_parts({1, 1}), 4}, ideal));
  EXPECT_FALSE(idealizes({Partition::from_parts({1, 1, 1}), 4}, ideal));
}

TEST(CenterMembership, Examples) {
  const int n = 4;
  EXPECT_TRUE(center_membership(GroupElement::delta(n, n), Ordinal::finite(1)));
  EXPECT_FALSE(center_membership(E("[x1]D4", n), Ordinal::finite(1)));
  EXPECT_TRUE(center_membership(E("[x1]D4", n), Ordinal::finite(2)));
  EXPECT_FALSE(center_membership(GroupElement::delta(n, n - 1), Ordinal::omega_power(n - 1)));
  EXPECT_TRUE(center_membership(GroupElement::delta(n, n - 1), Ordinal::omega_power(n - 1).successor()));
  EXPECT_TRUE(center_membership(GroupElement::identity(n), Ordinal()));
}

TEST(CenterMembership, CommutatorsStepDown) {
  RandomSource rng(41);
  for (int n = 3; n <= 4; ++n)
    for (const MonicMonomial& m : monic_basis(n, 4)) {
      const GroupElement b = GroupElement::from_monomial(n, MonomialElement(m));
      for (int t = 0; t < 10; ++t) {
        const GroupElement c = comm(b, rng.element(n));
        EXPECT_TRUE(center_membership(c, tdeg(b))) << m.to_string();
      }
    }
}

TEST(ChainStep, DeskScale) {
  for (int n : {3, 4})
    for (int i = 1; i <= 4; ++i) {
      const ChainStepResult r = verify_chain_step(n, i, 2 * (i + 2));
      EXPECT_TRUE(r.ok()) << "n=" << n << " i=" << i << (r.failures.empty() ? "" : " " + r.failures.front());
      EXPECT_EQ(r.unknown, 0U);
      EXPECT_EQ(r.group_added, r.predicted_added);
    }
}

TEST(ClosureDiscards, AttachedPerRowAndBoundChecked) {
  ChainReport rep = verify_growth(4, 6);
  attach_closure_discards(rep, 16);
  EXPECT_EQ(rep.wt_bound, 16);
  for (const ChainRow& row : rep.rows) EXPECT_EQ(row.discards, 0U);
  ChainReport tight = verify_growth(4, 6);
  EXPECT_THROW(attach_closure_discards(tight, 3), std::invalid_argument);
}
