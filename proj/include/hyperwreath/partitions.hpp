#pragma once

// Integer partitions in multiplicity form, enumeration, and the counting
// sequences a (partition numbers), b (prefix sums of a), c (prefix sums of b).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperwreath {

/// A partition stored as multiplicities: entry i-1 holds lambda_i, the number
/// of parts equal to i.  The vector never ends in a zero, so equal partitions
/// have equal storage.  The same vector doubles as the exponent vector of the
/// power monomial x^Lambda = prod x_i^{lambda_i}.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> multiplicities) : lambda_(std::move(multiplicities)) {
    for (int m : lambda_)
      if (m < 0) throw std::invalid_argument("Partition: negative multiplicity");
    trim();
  }

  static Partition from_parts(std::span<const int> parts) {
    std::vector<int> mult;
    for (int p : parts) {
      if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (static_cast<std::size_t>(p) > mult.size()) mult.resize(p, 0);
      ++mult[p - 1];
    }
    return Partition(std::move(mult));
  }

  static Partition from_parts(std::initializer_list<int> parts) {
    return from_parts(std::span<const int>(parts.begin(), parts.size()));
  }

  /// The single-variable exponent x_i^e.
  static Partition unit(int i, int e = 1) {
    if (i < 1) throw std::invalid_argument("Partition::unit: index must be >= 1");
    std::vector<int> mult(i, 0);
    mult[i - 1] = e;
    return Partition(std::move(mult));
  }

  /// lambda_i; zero outside the stored range.
  int multiplicity(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > lambda_.size()) return 0;
    return lambda_[i - 1];
  }

  std::span<const int> multiplicities() const { return lambda_; }

  bool empty() const { return lambda_.empty(); }

  /// Largest part (0 for the empty partition).  Also the highest variable
  /// index occurring in x^Lambda.
  int max_part() const { return static_cast<int>(lambda_.size()); }

  /// wt = sum i * lambda_i
  int weight() const {
    int w = 0;
    for (std::size_t i = 0; i < lambda_.size(); ++i) w += static_cast<int>(i + 1) * lambda_[i];
    return w;
  }

  /// Number of parts; total degree of x^Lambda.
  int degree() const {
    int d = 0;
    for (int m : lambda_) d += m;
    return d;
  }

  /// Parts in non-increasing order.
  std::vector<int> parts() const {
    std::vector<int> out;
    for (std::size_t i = lambda_.size(); i-- > 0;)
      out.insert(out.end(), lambda_[i], static_cast<int>(i + 1));
    return out;
  }

  /// Multiplicity-wise sum (product of power monomials).
  Partition operator+(const Partition& o) const {
    std::vector<int> out(std::max(lambda_.size(), o.lambda_.size()), 0);
    for (std::size_t i = 0; i < lambda_.size(); ++i) out[i] += lambda_[i];
    for (std::size_t i = 0; i < o.lambda_.size(); ++i) out[i] += o.lambda_[i];
    return Partition(std::move(out));
  }

  Partition scaled(int s) const {
    std::vector<int> out = lambda_;
    for (int& m : out) m *= s;
    return Partition(std::move(out));
  }

  /// Returns lambda with lambda_i changed by delta; throws if it would go negative.
  Partition adjusted(int i, int delta) const {
    if (i < 1) throw std::invalid_argument("Partition::adjusted: index must be >= 1");
    std::vector<int> out = lambda_;
    if (static_cast<std::size_t>(i) > out.size()) out.resize(i, 0);
    out[i - 1] += delta;
    if (out[i - 1] < 0) throw std::domain_error("Partition::adjusted: negative multiplicity");
    return Partition(std::move(out));
  }

  /// Lexicographic on (lambda_1, lambda_2, ...).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.lambda_.size(), b.lambda_.size());
    for (std::size_t i = 0; i < len; ++i) {
      const int x = i < a.lambda_.size() ? a.lambda_[i] : 0;
      const int y = i < b.lambda_.size() ? b.lambda_[i] : 0;
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.lambda_ == b.lambda_; }

  /// "{3,1,1}" style, parts descending.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int p : parts()) {
      if (!first) s += ',';
      s += std::to_string(p);
      first = false;
    }
    return s + "}";
  }

private:
  void trim() {
    while (!lambda_.empty() && lambda_.back() == 0) lambda_.pop_back();
  }

  std::vector<int> lambda_;
};

namespace detail {

inline void enumerate_rec(int remaining_weight, std::optional<int> remaining_parts, int largest,
                          std::vector<int>& mult, std::vector<Partition>& out) {
  if (remaining_weight == 0) {
    if (!remaining_parts || *remaining_parts == 0) out.emplace_back(mult);
    return;
  }
  if (largest == 0) return;
  if (remaining_parts && *remaining_parts == 0) return;
  // how many copies of `largest` to take
  int max_copies = remaining_weight / largest;
  if (remaining_parts) max_copies = std::min(max_copies, *remaining_parts);
  for (int copies = max_copies; copies >= 0; --copies) {
    mult[largest - 1] = copies;
    std::optional<int> parts_left;
    if (remaining_parts) parts_left = *remaining_parts - copies;
    enumerate_rec(remaining_weight - copies * largest, parts_left, largest - 1, mult, out);
  }
  mult[largest - 1] = 0;
}

} // namespace detail

/// All partitions of `weight` with exactly `num_parts` parts (any count when
/// nullopt), every part at most `max_part`.  Sorted lexicographically on the
/// multiplicity vector; empty when infeasible.
inline std::vector<Partition> enumerate_partitions(int weight, std::optional<int> num_parts,
                                                   int max_part) {
  if (weight < 0 || max_part < 0 || (num_parts && *num_parts < 0))
    throw std::invalid_argument("enumerate_partitions: arguments must be non-negative");
  std::vector<Partition> out;
  const int largest = std::min(max_part, weight);
  std::vector<int> mult(std::max(largest, 0), 0);
  detail::enumerate_rec(weight, num_parts, largest, mult, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sequences a_i = p(i), b_i = sum_{j<=i} a_j, c_i = sum_{j<=i} b_j for
/// 0 <= i <= limit.  The accessors return 0 for negative indices.
struct PartitionSequences {
  std::vector<std::uint64_t> a, b, c;

  std::uint64_t a_at(int i) const { return at(a, i); }
  std::uint64_t b_at(int i) const { return at(b, i); }
  std::uint64_t c_at(int i) const { return at(c, i); }

private:
  static std::uint64_t at(const std::vector<std::uint64_t>& v, int i) {
    if (i < 0) return 0;
    if (static_cast<std::size_t>(i) >= v.size())
      throw std::out_of_range("PartitionSequences: index beyond computed limit");
    return v[i];
  }
};

inline PartitionSequences partition_sequences(int limit) {
  if (limit < 0) throw std::invalid_argument("partition_sequences: limit must be >= 0");
  PartitionSequences s;
  s.a.assign(limit + 1, 0);
  s.a[0] = 1;
  for (int part = 1; part <= limit; ++part)
    for (int w = part; w <= limit; ++w) s.a[w] += s.a[w - part];
  s.b.resize(limit + 1);
  s.c.resize(limit + 1);
  std::uint64_t run_b = 0, run_c = 0;
  for (int i = 0; i <= limit; ++i) {
    run_b += s.a[i];
    s.b[i] = run_b;
    run_c += run_b;
    s.c[i] = run_c;
  }
  return s;
}

} // namespace hyperwreath

template <>
struct std::hash<hyperwreath::Partition> {
  std::size_t operator()(const hyperwreath::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int m : p.multiplicities()) h = (h ^ static_cast<std::size_t>(m)) * 0x100000001b3ULL;
    return h;
  }
};
