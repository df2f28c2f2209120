#pragma once

// Named invariant suites behind `hyperwreath verify`.  Each property is run
// on seeded random data and reported as a single pass/fail line.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chains.hpp"
#include "liering.hpp"
#include "random.hpp"
#include "regular.hpp"
#include "wreath.hpp"

namespace hyperwreath {

struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 200;    // random cases per property and n
  int i_max = 12;       // growth rows
  int step_i_max = 4;   // normalizer steps
  int wt_bound = -1;    // -1: 2(i+2) per step
  int radius = 2;
  int c_lo = -3;
  int c_hi = 3;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, if any
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group", "formulas", "phi", "centers", "chain", "regular", "all"};
  return names;
}

namespace detail {

class SuiteRunner {
public:
  SuiteRunner(std::string suite, std::vector<PropertyResult>& out) : suite_(std::move(suite)), out_(out) {}

  /// `check` returns an empty string on success, else a description.
  void property(const std::string& name, const std::function<std::string()>& check) {
    PropertyResult r{suite_, name, true, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

private:
  std::string suite_;
  std::vector<PropertyResult>& out_;
};

inline void suite_group(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  SuiteRunner run("group", out);
  for (int n = 2; n <= 5; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    run.property("associativity" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + n);
      for (int s = 0; s < cfg.samples; ++s) {
        const GroupElement a = rng.element(n), b = rng.element(n), c = rng.element(n);
        if (!((a * b) * c == a * (b * c))) return a.to_string() + " ; " + b.to_string() + " ; " + c.to_string();
      }
      return {};
    });
    run.property("two-sided inverse" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 10 + n);
      for (int s = 0; s < cfg.samples; ++s) {
        const GroupElement a = rng.element(n);
        if (!(a * a.inverse()).is_identity() || !(a.inverse() * a).is_identity()) return a.to_string();
      }
      return {};
    });
    run.property("right action" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 20 + n);
      for (int s = 0; s < cfg.samples; ++s) {
        const GroupElement a = rng.element(n), b = rng.element(n);
        const std::vector<Integer> x = rng.point(n);
        if ((a * b).act(x) != b.act(a.act(x))) return a.to_string() + " ; " + b.to_string();
      }
      return {};
    });
    run.property("text round trip" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 30 + n);
      for (int s = 0; s < cfg.samples; ++s) {
        const GroupElement a = rng.element(n);
        if (!(GroupElement::parse(a.to_string(), n) == a)) return a.to_string();
      }
      return {};
    });
  }
}

inline void suite_formulas(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  SuiteRunner run("formulas", out);
  run.property("comm equals comm_formula", [&]() -> std::string {
    RandomSource rng(cfg.seed + 100);
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s < cfg.samples; ++s) {
        const MonomialElement a = rng.monomial(n), b = rng.monomial(n);
        const GroupElement direct = comm(GroupElement::from_monomial(n, a), GroupElement::from_monomial(n, b));
        if (!(direct == comm_formula(a.poly(), a.layer, b.poly(), b.layer, n)))
          return a.to_string() + " , " + b.to_string();
      }
    return {};
  });
  run.property("comm_formula equals taylor_comm", [&]() -> std::string {
    RandomSource rng(cfg.seed + 101);
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s < cfg.samples; ++s) {
        MonomialElement a = rng.monomial(n, 2), b = rng.monomial(n);
        if (b.layer >= a.layer) continue;
        if (!(comm_formula(a.poly(), a.layer, b.poly(), b.layer, n) ==
              taylor_comm(a.poly(), a.layer, b.poly(), b.layer, n)))
          return a.to_string() + " , " + b.to_string();
      }
    return {};
  });
  run.property("leading term of a monomial commutator", [&]() -> std::string {
    RandomSource rng(cfg.seed + 102);
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s < cfg.samples; ++s) {
        const int k = rng.uniform(2, n);
        const MonicMonomial a{rng.partition(k - 1), k};
        const int u = rng.uniform(1, a.layer - 1);
        if (a.lambda.multiplicity(u) == 0) continue;
        const MonicMonomial b{rng.partition(u - 1), u};
        const auto predicted = leading_of_monomial_comm(a.lambda, a.layer, b.lambda, u);
        const GroupElement c = comm(GroupElement::from_monomial(n, MonomialElement(a)),
                                    GroupElement::from_monomial(n, MonomialElement(b)));
        if (!predicted || c.is_identity() || !(leading_term(c).to_string() == predicted->to_string()))
          return a.to_string() + " , " + b.to_string();
      }
    return {};
  });
  run.property("finite differences kill exactly degree < k", [&]() -> std::string {
    RandomSource rng(cfg.seed + 103);
    for (int s = 0; s < cfg.samples * 4; ++s) {
      Poly f;
      for (int e = 0; e <= 8; ++e) f += Poly::monomial(Partition::unit(1, e), Rational(rng.uniform(-2, 2)));
      const int deg = f.is_zero() ? -1 : f.total_degree();
      Poly g = f;
      for (int k = 1; k <= 10; ++k) {
        g = g.difference(1, Poly(1));
        if (g.is_zero() != (deg <= k - 1)) return f.to_string() + " at k=" + std::to_string(k);
      }
    }
    return {};
  });
}

inline void suite_phi(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  SuiteRunner run("phi", out);
  run.property("phi(comm) = bracket(phi, phi)", [&]() -> std::string {
    RandomSource rng(cfg.seed + 200);
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s < cfg.samples; ++s) {
        const GroupElement g = GroupElement::from_monomial(n, rng.monomial(n));
        const GroupElement h = GroupElement::from_monomial(n, rng.monomial(n));
        if (!(phi(comm(g, h)) == bracket(phi(g), phi(h)))) return g.to_string() + " , " + h.to_string();
      }
    return {};
  });
  run.property("bracket is antisymmetric", [&]() -> std::string {
    RandomSource rng(cfg.seed + 201);
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s < cfg.samples; ++s) {
        const LieElement a = phi(GroupElement::from_monomial(n, rng.monomial(n)));
        const LieElement b = phi(GroupElement::from_monomial(n, rng.monomial(n)));
        if (!(bracket(a, b) == -bracket(b, a))) return a.to_string() + " , " + b.to_string();
      }
    return {};
  });
  run.property("Jacobi identity", [&]() -> std::string {
    RandomSource rng(cfg.seed + 202);
    for (int n = 2; n <= 5; ++n)
      for (int s = 0; s < cfg.samples; ++s) {
        LieElement a(n), b(n), c(n);
        for (int t = 0; t < 2; ++t) {
          a = a + phi(GroupElement::from_monomial(n, rng.monomial(n)));
          b = b + phi(GroupElement::from_monomial(n, rng.monomial(n)));
          c = c + phi(GroupElement::from_monomial(n, rng.monomial(n)));
        }
        const LieElement j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        if (!j.terms().empty()) return a.to_string() + " ; " + b.to_string() + " ; " + c.to_string();
      }
    return {};
  });
}

inline void suite_centers(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  SuiteRunner run("centers", out);
  for (int n = 3; n <= 4; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    run.property("commutators drop the transfinite degree" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 300 + n);
      for (const MonicMonomial& m : monic_basis(n, 4)) {
        const GroupElement b = GroupElement::from_monomial(n, MonomialElement(m));
        const Ordinal alpha = tdeg(b);
        for (int s = 0; s < cfg.samples; ++s) {
          const GroupElement g = rng.element(n);
          const GroupElement c = comm(b, g);
          if (!center_membership(c, alpha)) return m.to_string() + " , " + g.to_string();
        }
      }
      return {};
    });
    run.property("Z_1 consists of the multiples of D_n" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 310 + n);
      const Ordinal one = Ordinal::finite(1);
      for (int s = 0; s < cfg.samples * 4; ++s) {
        const GroupElement g = s % 4 == 0 ? GroupElement::base(n, n, Poly(rng.coefficient())) : rng.element(n);
        bool multiple = true;
        for (int k = 1; k < n; ++k) multiple = multiple && g.layer(k).is_zero();
        multiple = multiple && g.layer(n).is_constant();
        if (center_membership(g, one) != multiple) return g.to_string();
      }
      return {};
    });
    run.property("the whole group is hypercentral of class w^(n-1) + ... + 1" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 320 + n);
      const Ordinal top = hypercentral_class(n);
      for (int s = 0; s < cfg.samples; ++s) {
        const GroupElement g = rng.element(n);
        if (!center_membership(g, top)) return g.to_string();
      }
      if (center_membership(GroupElement::delta(n, 1), tdeg(GroupElement::delta(n, 1))))
        return "D_1 lies below its own degree";
      return {};
    });
  }
}

inline void suite_chain(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  SuiteRunner run("chain", out);
  for (int n : {4, 5}) {
    run.property("growth law (n=" + std::to_string(n) + ", i <= " + std::to_string(cfg.i_max) + ")",
                 [&]() -> std::string {
                   const ChainReport rep = verify_growth(n, cfg.i_max);
                   for (const ChainRow& row : rep.rows)
                     if (row.checked && !row.match) return "row i=" + std::to_string(row.i);
                   return {};
                 });
  }
  for (int n : {3, 4})
    for (int i = 1; i <= cfg.step_i_max; ++i) {
      const int bound = cfg.wt_bound >= 0 ? cfg.wt_bound : 2 * (i + 2);
      run.property("normalizer step (n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                       ", wt <= " + std::to_string(bound) + ")",
                   [&, n, i, bound]() -> std::string {
                     const ChainStepResult r = verify_chain_step(n, i, bound);
                     if (r.ok()) return {};
                     return r.failures.empty() ? "added-basis counts differ" : r.failures.front();
                   });
    }
}

inline void suite_regular(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
  SuiteRunner run("regular", out);
  const std::string range = " (c in " + std::to_string(cfg.c_lo) + ".." + std::to_string(cfg.c_hi) + ")";
  for (int n = 2; n <= 4; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    run.property("abelian, normal under N_0, orbit-injective" + tag + range, [&]() -> std::string {
      for (int c = cfg.c_lo; c <= cfg.c_hi; ++c) {
        const RegularFamily f = make_family(c, n);
        if (!is_abelian(f)) return "not abelian at c=" + std::to_string(c);
        if (!is_normal_in_N0(f)) return "not normal at c=" + std::to_string(c);
        if (!orbit_injectivity(f, cfg.radius)) return "orbit collision at c=" + std::to_string(c);
        if (!membership_solve(GroupElement::delta(n, n), f)) return "D_n missing at c=" + std::to_string(c);
      }
      return {};
    });
    run.property("membership_solve inverts products of powers" + tag, [&]() -> std::string {
      RandomSource rng(cfg.seed + 500 + n);
      const RegularFamily f = make_family(rng.uniform(cfg.c_lo, cfg.c_hi), n);
      for (int s = 0; s < cfg.samples; ++s) {
        std::vector<Integer> m;
        GroupElement g = GroupElement::identity(n);
        for (int i = 0; i < n; ++i) {
          m.emplace_back(rng.uniform(-3, 3));
          g *= f.generators[i].pow(m.back().get_si());
        }
        const auto solved = membership_solve(g, f);
        if (!solved || *solved != m) return g.to_string();
      }
      return {};
    });
    run.property("conjugation by d x1^2 D_n shifts c by 2d" + tag, [&]() -> std::string {
      for (int d = -3; d <= 3; ++d)
        for (int c = cfg.c_lo; c <= cfg.c_hi; ++c) {
          const auto got = family_parameter(conjugate_family(make_family(c, n), d));
          if (!got || *got != c + 2 * d) return "c=" + std::to_string(c) + " d=" + std::to_string(d);
        }
      return {};
    });
  }
}

} // namespace detail

/// Runs one suite by name ("all" runs every suite).  Unknown names throw
/// std::invalid_argument.
inline std::vector<PropertyResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
  std::vector<PropertyResult> out;
  const bool all = name == "all";
  bool known = all;
  auto want = [&](const char* s) {
    const bool hit = all || name == s;
    known = known || hit;
    return hit;
  };
  if (want("group")) detail::suite_group(cfg, out);
  if (want("formulas")) detail::suite_formulas(cfg, out);
  if (want("phi")) detail::suite_phi(cfg, out);
  if (want("centers")) detail::suite_centers(cfg, out);
  if (want("chain")) detail::suite_chain(cfg, out);
  if (want("regular")) detail::suite_regular(cfg, out);
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

} // namespace hyperwreath
