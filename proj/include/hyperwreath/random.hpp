#pragma once

// Seeded random elements for property checks.  Monomials have weight at most
// `max_weight` and coefficients in [-max_coeff, max_coeff].

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "wreath.hpp"

namespace hyperwreath {

struct RandomSource {
  explicit RandomSource(std::uint64_t seed, int max_weight = 4, int max_coeff = 5)
      : engine(seed), max_weight(max_weight), max_coeff(max_coeff) {}

  std::mt19937_64 engine;
  int max_weight;
  int max_coeff;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }

  Integer coefficient(bool nonzero = false) {
    int c = 0;
    do c = uniform(-max_coeff, max_coeff);
    while (nonzero && c == 0);
    return c;
  }

  /// Uniform among the partitions with parts <= max_part and weight <= max_weight.
  Partition partition(int max_part) {
    if (max_part <= 0) return {};
    auto& pool = pools_[max_part];
    if (pool.empty())
      for (int w = 0; w <= max_weight; ++w)
        for (Partition& p : enumerate_partitions(w, std::nullopt, max_part)) pool.push_back(std::move(p));
    return pool[uniform(0, static_cast<int>(pool.size()) - 1)];
  }

  /// Integral polynomial in x_1..x_{nvars} with up to `max_terms` terms.
  Poly poly(int nvars, int max_terms = 3) {
    Poly p;
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) p += Poly::monomial(partition(nvars), Rational(coefficient()));
    return p;
  }

  GroupElement element(int n) {
    std::vector<Poly> layers;
    for (int k = 1; k <= n; ++k) layers.push_back(poly(k - 1));
    return GroupElement::from_layers(n, std::move(layers));
  }

  /// c x^L D_k with c != 0 and L in P(k-1); k drawn from [min_layer, n].
  MonomialElement monomial(int n, int min_layer = 1) {
    const int k = uniform(min_layer, n);
    return {coefficient(true), partition(k - 1), k};
  }

  std::vector<Integer> point(int n, int range = 20) {
    std::vector<Integer> x;
    for (int i = 0; i < n; ++i) x.emplace_back(uniform(-range, range));
    return x;
  }

private:
  std::map<int, std::vector<Partition>> pools_;
};

} // namespace hyperwreath
