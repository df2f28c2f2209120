#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hyperwreath/partitions.hpp"

using hyperwreath::Partition;
using hyperwreath::enumerate_partitions;
using hyperwreath::partition_sequences;

namespace {

// Every partition of n as a sorted part list, built from all 2^(n-1)
// compositions.  Independent of the library's recursive enumerator.
std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1U << b)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

} // namespace

TEST(Partition, WeightExamples) {
  EXPECT_EQ(Partition().weight(), 0);
  EXPECT_EQ(Partition({2, 1}).weight(), 4);
  EXPECT_EQ(Partition({0, 0, 3}).weight(), 9);
  EXPECT_EQ(Partition::from_parts({1, 1, 2}), Partition({2, 1}));
}

TEST(Partition, InvariantsAgreeWithPartList) {
  const Partition p = Partition::from_parts({5, 3, 3, 1});
  const std::vector<int> parts = p.parts();
  EXPECT_EQ(parts, (std::vector<int>{5, 3, 3, 1}));
  int sum = 0;
  for (int x : parts) sum += x;
  EXPECT_EQ(p.weight(), sum);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.max_part(), 5);
  EXPECT_GE(p.weight(), p.degree());
}

TEST(Partition, TrailingZerosAreTrimmed) {
  EXPECT_EQ(Partition({1, 0, 0}), Partition({1}));
  EXPECT_TRUE(Partition({0, 0}).empty());
  EXPECT_EQ(Partition({0, 2}).max_part(), 2);
}

TEST(Partition, AdjustedRejectsNegativeMultiplicity) {
  EXPECT_THROW((void)Partition({1}).adjusted(2, -1), std::domain_error);
  EXPECT_EQ(Partition({1}).adjusted(1, -1), Partition());
}

TEST(Partition, SumIsMonomialProduct) {
  EXPECT_EQ(Partition({1}) + Partition({1, 1}), Partition({2, 1}));
  EXPECT_EQ(Partition({1, 2}).scaled(3), Partition({3, 6}));
}

TEST(Enumerate, Examples) {
  const auto zero = enumerate_partitions(0, 0, 5);
  ASSERT_EQ(zero.size(), 1U);
  EXPECT_TRUE(zero.front().empty());

  const auto three = enumerate_partitions(3, 2, 2);
  ASSERT_EQ(three.size(), 1U);
  EXPECT_EQ(three.front(), Partition::from_parts({2, 1}));

  const auto four = enumerate_partitions(4, std::nullopt, 2);
  std::set<Partition> got(four.begin(), four.end());
  EXPECT_EQ(got, (std::set<Partition>{Partition::from_parts({2, 2}), Partition::from_parts({2, 1, 1}),
                                       Partition::from_parts({1, 1, 1, 1})}));
}

TEST(Enumerate, InfeasibleIsEmpty) {
  EXPECT_TRUE(enumerate_partitions(5, 1, 3).empty());
  EXPECT_TRUE(enumerate_partitions(3, 0, 3).empty());
  EXPECT_TRUE(enumerate_partitions(2, std::nullopt, 0).empty());
}

TEST(Enumerate, MatchesCompositionOracle) {
  for (int n = 0; n <= 12; ++n) {
    const auto oracle = partitions_by_compositions(n);
    for (int max_part = 0; max_part <= n + 1; ++max_part)
      for (int d = 0; d <= n; ++d) {
        std::set<std::vector<int>> expected;
        for (const auto& p : oracle)
          if (static_cast<int>(p.size()) == d && (p.empty() || p.front() <= max_part)) expected.insert(p);
        const auto got = enumerate_partitions(n, d, max_part);
        std::set<std::vector<int>> seen;
        for (const Partition& p : got) {
          EXPECT_EQ(p.weight(), n);
          EXPECT_EQ(p.degree(), d);
          EXPECT_LE(p.max_part(), max_part);
          EXPECT_TRUE(seen.insert(p.parts()).second) << "duplicate " << p.to_string();
        }
        EXPECT_EQ(seen, expected) << "n=" << n << " d=" << d << " max=" << max_part;
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
      }
  }
}

TEST(Enumerate, RejectsNegativeArguments) {
  EXPECT_THROW(enumerate_partitions(-1, 0, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(1, -1, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_partitions(1, 1, -1), std::invalid_argument);
}

TEST(Sequences, SmallValues) {
  const auto s = partition_sequences(5);
  EXPECT_EQ(s.a, (std::vector<std::uint64_t>{1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(s.b, (std::vector<std::uint64_t>{1, 2, 4, 7, 12, 19}));
  EXPECT_EQ(s.c, (std::vector<std::uint64_t>{1, 3, 7, 14, 26, 45}));
}

TEST(Sequences, AgreeWithEnumerationAndPrefixSums) {
  const auto s = partition_sequences(12);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(s.a_at(n), partitions_by_compositions(n).size());
    EXPECT_EQ(s.a_at(n), enumerate_partitions(n, std::nullopt, n).size());
  }
  for (int i = 1; i <= 12; ++i) {
    EXPECT_EQ(s.b_at(i) - s.b_at(i - 1), s.a_at(i));
    EXPECT_EQ(s.c_at(i) - s.c_at(i - 1), s.b_at(i));
    EXPECT_GE(s.c_at(i), s.c_at(i - 1));
  }
}

TEST(Sequences, NegativeIndexIsZero) {
  const auto s = partition_sequences(3);
  EXPECT_EQ(s.b_at(-1), 0U);
  EXPECT_EQ(s.c_at(-4), 0U);
  EXPECT_THROW((void)s.c_at(4), std::out_of_range);
}
