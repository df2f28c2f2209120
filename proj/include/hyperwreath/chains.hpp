#pragma once

// Level functions, the generator sets N_i of the normalizer chain starting at
// T = <D_1, ..., D_n>, their growth against partition sums, saturated closure,
// and bounded normalizer / idealizer checks.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "liering.hpp"
#include "ordinals.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "wreath.hpp"

namespace hyperwreath {

namespace detail {
inline int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
} // namespace detail

/// h_i = floor((i-1)/(n-1)) + 1, floor toward -infinity for i <= 0.
inline int h_func(int i, int n) {
  if (n < 2) throw std::invalid_argument("h_func: n must be >= 2");
  return detail::floor_div(i - 1, n - 1) + 1;
}

/// 1 <= r_i <= n-1 with i = r_i mod (n-1).
inline int r_func(int i, int n) {
  if (n < 2) throw std::invalid_argument("r_func: n must be >= 2");
  if (i < 1) throw std::invalid_argument("r_func: defined for i >= 1 only");
  return (i - 1) % (n - 1) + 1;
}

/// wdd(x^L D_k) = wt(L) - deg(L) + n - k
inline int wdd(const MonicMonomial& m, int n) { return m.lambda.weight() - m.lambda.degree() + n - m.layer; }

/// lev_i(x^L D_k) = h_i wdd + deg - 1
inline int lev(int i, const MonicMonomial& m, int n) { return h_func(i, n) * wdd(m, n) + m.lambda.degree() - 1; }

/// Finite set of monic basis monomials describing a saturated subgroup.
/// `closure_bound` is the weight bound of the last closure (-1 if the set
/// was never closed); `discards` counts monomials cut off by that bound.
struct SaturatedSet {
  int n = 0;
  std::set<MonicMonomial> basis;
  int closure_bound = -1;
  std::size_t discards = 0;

  bool contains(const MonicMonomial& m) const { return basis.contains(m); }

  /// Every constituent of g has its monic part in the basis.
  bool contains(const GroupElement& g) const {
    for (const MonomialElement& m : decompose(g))
      if (!basis.contains(m.monic_part())) return false;
    return true;
  }

  /// Closed with nothing cut off: membership beyond the bound is decided too.
  bool complete() const { return closure_bound >= 0 && discards == 0; }

  int max_weight() const {
    int w = 0;
    for (const MonicMonomial& m : basis) w = std::max(w, m.lambda.weight());
    return w;
  }

  std::set<LieBasis> lie_image() const {
    std::set<LieBasis> out;
    for (const MonicMonomial& m : basis) out.insert(phi_basis(m));
    return out;
  }
};

/// {D_1, ..., D_n}, the generators of T.
inline SaturatedSet translation_set(int n) {
  SaturatedSet s{n, {}, -1, 0};
  for (int k = 1; k <= n; ++k) s.basis.insert({Partition(), k});
  return s;
}

/// Monomials with lev_j = j for one fixed level j >= 0.
inline std::set<MonicMonomial> level_set(int j, int n) {
  if (j < 0) throw std::invalid_argument("level_set: j must be >= 0");
  std::set<MonicMonomial> out;
  const int h = h_func(j, n);
  for (int k = 1; k <= n; ++k) {
    if (h == 0) {
      // lev_0 = deg - 1: exactly the degree-one monomials x_p D_k
      for (int p = 1; p <= k - 1; ++p) out.insert({Partition::unit(p), k});
      continue;
    }
    for (int d = 0; d <= j + 1; ++d) {
      if ((j + 1 - d) % h != 0) continue;
      const int w = (j + 1 - d) / h;
      const int wt = w + d - (n - k);
      if (wt < 0) continue;
      for (Partition& p : enumerate_partitions(wt, d, k - 1)) out.insert({std::move(p), k});
    }
  }
  return out;
}

/// N_i: T together with every monomial at level j for some 0 <= j <= i.
/// N_{-1} = T.
inline SaturatedSet enumerate_N(int i, int n) {
  if (i < -1) throw std::invalid_argument("enumerate_N: i must be >= -1");
  if (n < 2) throw std::invalid_argument("enumerate_N: n must be >= 2");
  SaturatedSet s = translation_set(n);
  for (int j = 0; j <= i; ++j) s.basis.merge(level_set(j, n));
  return s;
}

/// L_i = N_i \ N_{i-1}
inline std::set<MonicMonomial> enumerate_L(int i, int n) {
  if (i < 0) throw std::invalid_argument("enumerate_L: i must be >= 0");
  const SaturatedSet prev = enumerate_N(i - 1, n);
  std::set<MonicMonomial> out;
  for (const MonicMonomial& m : enumerate_N(i, n).basis)
    if (!prev.contains(m)) out.insert(m);
  return out;
}

/// |L_i cap B_k| for k = 1..n.
inline std::map<int, std::uint64_t> layer_counts(int i, int n) {
  std::map<int, std::uint64_t> counts;
  for (int k = 1; k <= n; ++k) counts[k] = 0;
  for (const MonicMonomial& m : enumerate_L(i, n)) ++counts[m.layer];
  return counts;
}

struct ChainRow {
  int i = 0;
  int r = 0;
  int h = 0;
  std::vector<MonicMonomial> generators;  // L_i
  std::map<int, std::uint64_t> counts;
  std::map<int, std::uint64_t> predicted;
  std::uint64_t total = 0;
  std::uint64_t predicted_total = 0;
  bool checked = false;  // i above the threshold (n-4)(n-1)
  bool match = false;
  std::size_t discards = 0;
};

struct ChainReport {
  int n = 0;
  int i_max = 0;
  int wt_bound = -1;  // -1: closure not computed
  std::vector<ChainRow> rows;

  /// Every row above the threshold matches.
  bool all_match() const {
    for (const ChainRow& row : rows)
      if (row.checked && !row.match) return false;
    return true;
  }
};

/// Compares |L_i cap B_k| with b_{r_i+k-n-1} and |L_i| with c_{r_i-1} for
/// 1 <= i <= i_max.
inline ChainReport verify_growth(int n, int i_max);

/// Least superset of `gens` closed under taking monic parts of the
/// constituents of commutators of its members.  Constituents of weight above
/// `wt_bound` are counted in `discards` and not added.
inline SaturatedSet saturated_closure(const SaturatedSet& gens, int wt_bound, int max_rounds = 256) {
  if (wt_bound < gens.max_weight())
    throw std::invalid_argument("saturated_closure: bound " + std::to_string(wt_bound) + " below generator weight " +
                                std::to_string(gens.max_weight()));
  const int n = gens.n;
  SaturatedSet out{n, gens.basis, wt_bound, 0};
  std::set<MonicMonomial> discarded;
  std::vector<MonicMonomial> frontier(gens.basis.begin(), gens.basis.end());
  for (int round = 0; !frontier.empty(); ++round) {
    if (round >= max_rounds) throw std::runtime_error("saturated_closure: no fixpoint within the iteration cap");
    const std::vector<MonicMonomial> all(out.basis.begin(), out.basis.end());
    std::set<MonicMonomial> fresh;
    for (const MonicMonomial& a : frontier)
      for (const MonicMonomial& b : all) {
        if (a.layer == b.layer) continue;
        const GroupElement c =
            comm_formula(MonomialElement(a).poly(), a.layer, MonomialElement(b).poly(), b.layer, n);
        for (const MonomialElement& part : decompose(c)) {
          MonicMonomial m = part.monic_part();
          if (out.basis.contains(m)) continue;
          if (m.lambda.weight() > wt_bound)
            discarded.insert(std::move(m));
          else
            fresh.insert(std::move(m));
        }
      }
    frontier.assign(fresh.begin(), fresh.end());
    out.basis.merge(fresh);
  }
  out.discards = discarded.size();
  return out;
}

enum class Verdict { no, yes, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::yes: return "yes";
  case Verdict::no: return "no";
  case Verdict::unknown: return "unknown";
  }
  return "?";
}

/// Whether every constituent of [b, m], m in H, lies in H.  H must have been
/// closed.  A constituent outside H is decisive when H is complete or the
/// constituent is within the closure bound; otherwise it yields `unknown`.
inline Verdict normalizes(const MonicMonomial& b, const SaturatedSet& h) {
  if (h.closure_bound < 0) throw std::invalid_argument("normalizes: set must be closed first");
  if (!b.well_formed(h.n)) throw std::invalid_argument("normalizes: ill-formed monomial");
  bool undecided = false;
  const Poly bf = MonomialElement(b).poly();
  for (const MonicMonomial& m : h.basis) {
    if (m.layer == b.layer) continue;
    const GroupElement c = comm_formula(bf, b.layer, MonomialElement(m).poly(), m.layer, h.n);
    for (const MonomialElement& part : decompose(c)) {
      const MonicMonomial p = part.monic_part();
      if (h.contains(p)) continue;
      if (h.complete() || p.lambda.weight() <= h.closure_bound) return Verdict::no;
      undecided = true;
    }
  }
  return undecided ? Verdict::unknown : Verdict::yes;
}

/// Whether [b, m] lies in the span of `ideal` for every basis element m of it.
inline bool idealizes(const LieBasis& b, const std::set<LieBasis>& ideal) {
  for (const LieBasis& m : ideal) {
    const auto t = bracket_basis(b, m);
    if (t && !ideal.contains(t->second)) return false;
  }
  return true;
}

/// g in Z_alpha(W_n), i.e. g = 1 or tdeg(g) < alpha.
inline bool center_membership(const GroupElement& g, const Ordinal& alpha) {
  return g.is_identity() || tdeg(g) < alpha;
}

/// Every monic basis monomial of W_n with wt <= wt_bound.
inline std::vector<MonicMonomial> monic_basis(int n, int wt_bound) {
  std::vector<MonicMonomial> out;
  for (int k = 1; k <= n; ++k)
    for (int w = 0; w <= wt_bound; ++w)
      for (Partition& p : enumerate_partitions(w, std::nullopt, k - 1)) out.push_back({std::move(p), k});
  return out;
}

/// Bounded check of N_{W_n}(<N_{i-1}>) = <N_i> and of the idealizer mirror.
struct ChainStepResult {
  int n = 0;
  int i = 0;
  int wt_bound = 0;
  std::size_t candidates = 0;
  std::size_t closure_size = 0;
  std::size_t closure_discards = 0;
  bool closure_added = false;  // closure of N_{i-1} is larger than N_{i-1}
  std::size_t false_negatives = 0;  // b in N_i that fails to normalize
  std::size_t false_positives = 0;  // b outside N_i that normalizes
  std::size_t unknown = 0;
  std::size_t mirror_disagreements = 0;  // normalizes != idealizes
  std::size_t group_added = 0;  // |normalizing candidates| - |H cap B|
  std::size_t lie_added = 0;    // |idealizing candidates| - |H^phi cap basis|
  std::size_t predicted_added = 0;  // |L_i|
  std::vector<std::string> failures;

  bool ok() const {
    return false_negatives == 0 && false_positives == 0 && unknown == 0 && mirror_disagreements == 0 &&
           closure_discards == 0 && !closure_added && group_added == predicted_added &&
           lie_added == predicted_added;
  }
};

inline ChainStepResult verify_chain_step(int n, int i, int wt_bound) {
  ChainStepResult res;
  res.n = n;
  res.i = i;
  res.wt_bound = wt_bound;
  const SaturatedSet prev = enumerate_N(i - 1, n);
  const SaturatedSet target = enumerate_N(i, n);
  const SaturatedSet h = saturated_closure(prev, wt_bound);
  res.closure_size = h.basis.size();
  res.closure_discards = h.discards;
  res.closure_added = h.basis.size() != prev.basis.size();
  const std::set<LieBasis> ideal = h.lie_image();

  const std::vector<MonicMonomial> candidates = monic_basis(n, wt_bound);
  res.candidates = candidates.size();
  std::vector<Verdict> group(candidates.size());
  std::vector<char> lie(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t idx) {
    group[idx] = normalizes(candidates[idx], h);
    lie[idx] = idealizes(phi_basis(candidates[idx]), ideal) ? 1 : 0;
  });

  std::size_t group_in = 0, lie_in = 0;
  for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
    const MonicMonomial& b = candidates[idx];
    const bool expected = target.contains(b);
    const Verdict v = group[idx];
    if (v == Verdict::unknown) {
      ++res.unknown;
      res.failures.push_back("unknown: " + b.to_string());
      continue;
    }
    const bool got = v == Verdict::yes;
    group_in += got ? 1 : 0;
    lie_in += lie[idx] ? 1 : 0;
    if (expected && !got) {
      ++res.false_negatives;
      res.failures.push_back("in N_i but does not normalize: " + b.to_string());
    }
    if (!expected && got) {
      ++res.false_positives;
      res.failures.push_back("outside N_i but normalizes: " + b.to_string());
    }
    if (got != static_cast<bool>(lie[idx])) {
      ++res.mirror_disagreements;
      res.failures.push_back("normalizer/idealizer disagree on " + b.to_string());
    }
  }
  res.group_added = group_in - h.basis.size();
  res.lie_added = lie_in - ideal.size();
  res.predicted_added = target.basis.size() - prev.basis.size();
  return res;
}

inline ChainReport verify_growth(int n, int i_max) {
  if (n < 2) throw std::invalid_argument("verify_growth: n must be >= 2");
  if (i_max < 0) throw std::invalid_argument("verify_growth: i_max must be >= 0");
  ChainReport report;
  report.n = n;
  report.i_max = i_max;
  const PartitionSequences seq = partition_sequences(std::max(n, 1));
  const int threshold = (n - 4) * (n - 1);
  SaturatedSet prev = enumerate_N(0, n);
  for (int i = 1; i <= i_max; ++i) {
    SaturatedSet cur = enumerate_N(i, n);
    ChainRow row;
    row.i = i;
    row.r = r_func(i, n);
    row.h = h_func(i, n);
    for (int k = 1; k <= n; ++k) {
      row.counts[k] = 0;
      row.predicted[k] = seq.b_at(row.r + k - n - 1);
    }
    for (const MonicMonomial& m : cur.basis)
      if (!prev.contains(m)) {
        row.generators.push_back(m);
        ++row.counts[m.layer];
      }
    row.total = row.generators.size();
    row.predicted_total = seq.c_at(row.r - 1);
    row.checked = i > threshold;
    row.match = row.counts == row.predicted && row.total == row.predicted_total;
    report.rows.push_back(std::move(row));
    prev = std::move(cur);
  }
  return report;
}

/// Runs saturated_closure on every N_i of the report at the given bound and
/// records the number of discarded constituents per row.
inline void attach_closure_discards(ChainReport& report, int wt_bound) {
  report.wt_bound = wt_bound;
  for (ChainRow& row : report.rows) {
    const SaturatedSet s = enumerate_N(row.i, report.n);
    if (s.max_weight() > wt_bound)
      throw std::invalid_argument("attach_closure_discards: N_" + std::to_string(row.i) + " has weight " +
                                  std::to_string(s.max_weight()) + " above the bound " + std::to_string(wt_bound));
    const SaturatedSet closed = saturated_closure(s, wt_bound);
    row.discards = closed.discards + (closed.basis.size() - s.basis.size());
  }
}

} // namespace hyperwreath
