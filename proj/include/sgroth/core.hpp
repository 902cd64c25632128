#ifndef SGROTH_CORE_HPP
#define SGROTH_CORE_HPP

// Partitions, exponent vectors, dominance order and majorization.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgroth {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A Young diagram in English notation: weakly decreasing, nonnegative row
/// lengths. Stored with trailing zeros stripped so equality is structural.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) {
        throw std::invalid_argument("partition parts must be nonnegative");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Nonzero parts only.
  const std::vector<int>& parts() const noexcept { return parts_; }

  /// Number of nonzero rows.
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Total box count |λ|.
  int size() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  bool empty() const noexcept { return parts_.empty(); }

  /// Part in 1-based row `row`; zero past the last nonzero row.
  int row(int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  /// Zero-padded to exactly n entries.
  std::vector<int> padded(int n) const {
    if (length() > n) {
      throw std::invalid_argument("partition has more than " +
                                  std::to_string(n) + " rows");
    }
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
  }

  /// Rowwise containment of Young diagrams.
  bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int r = 1; r <= inner.length(); ++r) {
      if (inner.row(r) > row(r)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Graded: by size first, then lexicographically on the parts.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
  }

 private:
  std::vector<int> parts_;
};

/// Monomial exponent / lattice point in Z_{>=0}^n.
class ExponentVector {
 public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<int> entries)
      : entries_(std::move(entries)) {
    for (int e : entries_) {
      if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    }
  }

  ExponentVector(std::initializer_list<int> entries)
      : ExponentVector(std::vector<int>(entries)) {}

  static ExponentVector zero(int n) {
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 0));
  }

  const std::vector<int>& entries() const noexcept { return entries_; }
  int dimension() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }

  /// Coordinate sum.
  int degree() const noexcept {
    int total = 0;
    for (int e : entries_) total += e;
    return total;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const ExponentVector&,
                         const ExponentVector&) = default;
  /// Plain lexicographic order.
  friend auto operator<=>(const ExponentVector&,
                          const ExponentVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
    return os << v.to_string();
  }

 private:
  std::vector<int> entries_;
};

/// Fixed-length vector of exact rationals.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}
  explicit RationalVector(std::size_t n) : entries_(n) {}

  explicit RationalVector(const ExponentVector& v) {
    entries_.reserve(v.entries().size());
    for (int e : v.entries()) entries_.emplace_back(e);
  }

  static RationalVector from_partition(const Partition& p, int n) {
    std::vector<Rational> out;
    for (int e : p.padded(n)) out.emplace_back(e);
    return RationalVector(std::move(out));
  }

  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::vector<Rational>& entries() noexcept { return entries_; }
  std::size_t dimension() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  Rational sum() const {
    Rational total = 0;
    for (const auto& e : entries_) total += e;
    return total;
  }

  RationalVector& operator+=(const RationalVector& other) {
    if (other.dimension() != dimension()) {
      throw std::invalid_argument("vector length mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other[i];
    return *this;
  }

  friend RationalVector operator+(RationalVector a, const RationalVector& b) {
    a += b;
    return a;
  }

  friend RationalVector operator*(const Rational& c, RationalVector v) {
    for (auto& e : v.entries_) e *= c;
    return v;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += entries_[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const RationalVector&,
                         const RationalVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
    return os << v.to_string();
  }

 private:
  std::vector<Rational> entries_;
};

/// θ ≤_D δ: every prefix sum of θ is at most the matching prefix sum of δ.
/// Only defined for partitions of the same size.
inline bool dominance_leq(const Partition& theta, const Partition& delta) {
  if (theta.size() != delta.size()) {
    throw std::domain_error("dominance undefined across sizes");
  }
  const int rows = std::max(theta.length(), delta.length());
  int lhs = 0;
  int rhs = 0;
  for (int t = 1; t <= rows; ++t) {
    lhs += theta.row(t);
    rhs += delta.row(t);
    if (lhs > rhs) return false;
  }
  return true;
}

inline ExponentVector sort_decreasing(const ExponentVector& v) {
  std::vector<int> out = v.entries();
  std::sort(out.begin(), out.end(), std::greater<>());
  return ExponentVector(std::move(out));
}

inline RationalVector sort_decreasing(const RationalVector& v) {
  std::vector<Rational> out = v.entries();
  std::sort(out.begin(), out.end(), std::greater<>());
  return RationalVector(std::move(out));
}

/// True iff `v` is majorized by the weakly decreasing vector `mu`:
/// equal sums and every prefix sum of v sorted decreasingly is ≤ that of mu.
/// Shorter operands are padded with zeros.
inline bool majorizes(const RationalVector& mu, const RationalVector& v) {
  for (std::size_t i = 0; i < mu.dimension(); ++i) {
    if (mu[i] < 0) throw std::invalid_argument("negative entry in majorant");
    if (i > 0 && mu[i] > mu[i - 1]) {
      throw std::invalid_argument("majorant must be weakly decreasing");
    }
  }
  for (const auto& e : v.entries()) {
    if (e < 0) throw std::invalid_argument("majorization needs nonnegative entries");
  }
  if (mu.sum() != v.sum()) {
    throw std::domain_error("majorization undefined across unequal sums");
  }
  const RationalVector sorted = sort_decreasing(v);
  const std::size_t len = std::max(mu.dimension(), sorted.dimension());
  Rational lhs = 0;
  Rational rhs = 0;
  for (std::size_t t = 0; t < len; ++t) {
    if (t < sorted.dimension()) lhs += sorted[t];
    if (t < mu.dimension()) rhs += mu[t];
    if (lhs > rhs) return false;
  }
  return true;
}

inline bool majorizes(const Partition& mu, const RationalVector& v) {
  const int n = std::max(mu.length(), static_cast<int>(v.dimension()));
  return majorizes(RationalVector::from_partition(mu, n), v);
}

/// Integer fast path of the rational overload.
inline bool majorizes(const Partition& mu, const ExponentVector& v) {
  if (mu.size() != v.degree()) {
    throw std::domain_error("majorization undefined across unequal sums");
  }
  const ExponentVector sorted = sort_decreasing(v);
  int lhs = 0;
  int rhs = 0;
  for (int t = 0; t < sorted.dimension(); ++t) {
    lhs += sorted[static_cast<std::size_t>(t)];
    rhs += mu.row(t + 1);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Σ weights[i] · vectors[i]; weights must be nonnegative and sum to exactly 1.
inline RationalVector convex_combination(std::span<const Rational> weights,
                                         std::span<const RationalVector> vectors) {
  if (weights.size() != vectors.size() || vectors.empty()) {
    throw std::invalid_argument("need one weight per vector");
  }
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("convex weights must be nonnegative");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("convex weights must sum to 1");
  const std::size_t n = vectors.front().dimension();
  RationalVector out(n);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].dimension() != n) {
      throw std::invalid_argument("vector length mismatch");
    }
    if (weights[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += weights[k] * vectors[k][i];
  }
  return out;
}

/// All partitions fitting in a `max_rows` × `max_part` box, ordered by
/// size then lexicographically.
inline std::vector<Partition> partitions_in_box(int max_rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int bound) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == max_rows) return;
    for (int p = 1; p <= bound; ++p) {
      current.push_back(p);
      extend(p);
      current.pop_back();
    }
  };
  extend(max_part);
  std::sort(out.begin(), out.end());
  return out;
}

/// All partitions of `size` with at most `max_rows` rows.
inline std::vector<Partition> partitions_of(int size, int max_rows) {
  std::vector<Partition> out;
  for (auto& p : partitions_in_box(max_rows, size)) {
    if (p.size() == size) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace sgroth

#endif  // SGROTH_CORE_HPP
