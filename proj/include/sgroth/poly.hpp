#ifndef SGROTH_POLY_HPP
#define SGROTH_POLY_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgroth/core.hpp"

namespace sgroth {

/// Graded lexicographic order: total degree first, then lex on entries.
struct GradedLex {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

/// Multivariate polynomial in x_1..x_n with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  using Terms = std::map<ExponentVector, Integer, GradedLex>;

  explicit SparsePolynomial(int n = 0) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
  }

  static SparsePolynomial constant(int n, const Integer& c) {
    SparsePolynomial f(n);
    f.add_term(ExponentVector::zero(n), c);
    return f;
  }

  /// The variable x_i, 1-based.
  static SparsePolynomial variable(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    SparsePolynomial f(n);
    f.add_term(ExponentVector(std::move(e)), 1);
    return f;
  }

  static SparsePolynomial monomial(const ExponentVector& alpha,
                                   const Integer& c = 1) {
    SparsePolynomial f(alpha.dimension());
    f.add_term(alpha, c);
    return f;
  }

  int ambient() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Adds c·x^alpha in place, purging the term if it cancels.
  void add_term(const ExponentVector& alpha, const Integer& c) {
    if (alpha.dimension() != n_) {
      throw std::invalid_argument("exponent length does not match ambient n");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const ExponentVector& alpha) const {
    if (alpha.dimension() != n_) {
      throw std::invalid_argument("exponent length does not match ambient n");
    }
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  std::set<ExponentVector> support() const {
    std::set<ExponentVector> out;
    for (const auto& [alpha, c] : terms_) out.insert(alpha);
    return out;
  }

  /// Degree-k part.
  SparsePolynomial homogeneous_component(int k) const {
    if (k < 0) throw std::invalid_argument("negative degree");
    SparsePolynomial out(n_);
    for (const auto& [alpha, c] : terms_) {
      if (alpha.degree() == k) out.terms_.emplace_hint(out.terms_.end(), alpha, c);
    }
    return out;
  }

  /// Smallest and largest total degree; (0, -1) for the zero polynomial.
  std::pair<int, int> degree_range() const {
    if (terms_.empty()) return {0, -1};
    return {terms_.begin()->first.degree(), terms_.rbegin()->first.degree()};
  }

  /// Invariance under every adjacent transposition x_i <-> x_{i+1}.
  bool is_symmetric() const {
    for (int i = 0; i + 1 < n_; ++i) {
      for (const auto& [alpha, c] : terms_) {
        std::vector<int> swapped = alpha.entries();
        std::swap(swapped[static_cast<std::size_t>(i)],
                  swapped[static_cast<std::size_t>(i + 1)]);
        auto it = terms_.find(ExponentVector(std::move(swapped)));
        if (it == terms_.end() || it->second != c) return false;
      }
    }
    return true;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& g) {
    check_ambient(g);
    for (const auto& [alpha, c] : g.terms_) add_term(alpha, c);
    return *this;
  }

  SparsePolynomial& operator-=(const SparsePolynomial& g) {
    check_ambient(g);
    for (const auto& [alpha, c] : g.terms_) add_term(alpha, -c);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial f, const SparsePolynomial& g) {
    f += g;
    return f;
  }

  friend SparsePolynomial operator-(SparsePolynomial f, const SparsePolynomial& g) {
    f -= g;
    return f;
  }

  friend SparsePolynomial operator*(const Integer& c, const SparsePolynomial& f) {
    SparsePolynomial out(f.n_);
    if (c == 0) return out;
    for (const auto& [alpha, a] : f.terms_) {
      out.terms_.emplace_hint(out.terms_.end(), alpha, c * a);
    }
    return out;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& f,
                                    const SparsePolynomial& g) {
    f.check_ambient(g);
    SparsePolynomial out(f.n_);
    std::vector<int> sum(static_cast<std::size_t>(f.n_));
    for (const auto& [a, ca] : f.terms_) {
      for (const auto& [b, cb] : g.terms_) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
        out.add_term(ExponentVector(sum), ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const SparsePolynomial&,
                         const SparsePolynomial&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [alpha, c] : terms_) {
      const bool negative = c < 0;
      const Integer mag = negative ? Integer(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono;
      for (int i = 0; i < n_; ++i) {
        const int e = alpha[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += "x" + std::to_string(i + 1);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += mono;
      }
    }
    return out;
  }

 private:
  void check_ambient(const SparsePolynomial& g) const {
    if (g.n_ != n_) throw std::invalid_argument("ambient variable count mismatch");
  }

  int n_;
  Terms terms_;
};

inline SparsePolynomial add(const SparsePolynomial& f, const SparsePolynomial& g) {
  return f + g;
}

inline SparsePolynomial scale(const Integer& c, const SparsePolynomial& f) {
  return c * f;
}

inline SparsePolynomial multiply(const SparsePolynomial& f,
                                 const SparsePolynomial& g) {
  return f * g;
}

}  // namespace sgroth

#endif  // SGROTH_POLY_HPP
