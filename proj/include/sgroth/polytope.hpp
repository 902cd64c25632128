#ifndef SGROTH_POLYTOPE_HPP
#define SGROTH_POLYTOPE_HPP

// Permutahedra, Rado containment, exact convex hull membership and the two
// saturated-Newton-polytope checks.

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgroth/core.hpp"
#include "sgroth/groth.hpp"
#include "sgroth/poly.hpp"

namespace sgroth {

/// Convex hull of the S_n-orbit of a partition padded to length n.
class Permutahedron {
 public:
  Permutahedron(Partition weight, int n) : weight_(std::move(weight)), n_(n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (weight_.length() > n) {
      throw std::invalid_argument("weight " + weight_.to_string() + " has more than " +
                                  std::to_string(n) + " parts");
    }
  }

  const Partition& weight() const noexcept { return weight_; }
  int ambient() const noexcept { return n_; }

  /// Distinct coordinate permutations of the weight.
  std::set<ExponentVector> vertices() const {
    std::vector<int> v = weight_.padded(n_);
    std::sort(v.begin(), v.end());
    std::set<ExponentVector> out;
    do {
      out.emplace(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  /// Integer points: nonnegative v with |v| = |weight| majorized by the weight.
  std::set<ExponentVector> lattice_points() const {
    std::set<ExponentVector> out;
    const int total = weight_.size();
    const int cap = weight_.row(1);
    std::vector<int> v(static_cast<std::size_t>(n_), 0);
    auto fill = [&](auto&& self, int i, int remaining) -> void {
      if (i == n_ - 1) {
        if (remaining > cap) return;
        v[static_cast<std::size_t>(i)] = remaining;
        ExponentVector point(v);
        if (majorizes(weight_, point)) out.insert(std::move(point));
        return;
      }
      for (int e = 0; e <= std::min(cap, remaining); ++e) {
        v[static_cast<std::size_t>(i)] = e;
        self(self, i + 1, remaining - e);
      }
    };
    fill(fill, 0, total);
    return out;
  }

 private:
  Partition weight_;
  int n_;
};

inline std::set<ExponentVector> permutahedron_vertices(const Permutahedron& p) {
  return p.vertices();
}

inline std::set<ExponentVector> permutahedron_lattice_points(const Permutahedron& p) {
  return p.lattice_points();
}

/// P_θ ⊆ P_δ, decided by dominance.
inline bool rado_contains(const Partition& theta, const Partition& delta) {
  return dominance_leq(theta, delta);
}

/// Finite point set in Z_{>=0}^n.
struct PointCloud {
  int n = 0;
  std::vector<ExponentVector> points;

  PointCloud() = default;
  PointCloud(int dimension, std::vector<ExponentVector> pts)
      : n(dimension), points(std::move(pts)) {
    for (const auto& p : points) {
      if (p.dimension() != n) throw std::invalid_argument("point dimension mismatch");
    }
  }
  template <class Range>
  static PointCloud of(int dimension, const Range& pts) {
    return PointCloud(dimension, std::vector<ExponentVector>(pts.begin(), pts.end()));
  }
};

namespace detail {

// Phase-one simplex over exact rationals for
//   Σ_i c_i w_i = q,  Σ_i c_i = 1,  c ≥ 0,
// one artificial per row, Bland's least-index rule for entering and leaving
// variables. Returns whether the artificial objective reaches zero.
class FeasibilitySimplex {
 public:
  FeasibilitySimplex(const RationalVector& q, std::span<const ExponentVector> points)
      : rows_(q.dimension() + 1), cols_(points.size() + rows_) {
    table_.assign(rows_ + 1, std::vector<Rational>(cols_ + 1));
    basis_.resize(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational rhs = r + 1 < rows_ ? q[r] : Rational(1);
      const bool flip = rhs < 0;
      for (std::size_t j = 0; j < points.size(); ++j) {
        Rational a = r + 1 < rows_ ? Rational(points[j][r]) : Rational(1);
        table_[r][j] = flip ? Rational(-a) : a;
      }
      table_[r][points.size() + r] = 1;
      table_[r][cols_] = flip ? Rational(-rhs) : rhs;
      basis_[r] = points.size() + r;
    }
    // Reduced costs of the artificial objective: cost minus column sums.
    auto& z = table_[rows_];
    for (std::size_t j = 0; j <= cols_; ++j) {
      Rational sum = 0;
      for (std::size_t r = 0; r < rows_; ++r) sum += table_[r][j];
      const bool artificial = j >= points.size() && j < cols_;
      z[j] = (artificial ? Rational(1) : Rational(0)) - sum;
    }
  }

  bool feasible() {
    auto& z = table_[rows_];
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (z[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) break;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& a = table_[r][*entering];
        if (a <= 0) continue;
        Rational ratio = table_[r][cols_] / a;
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      // The artificial objective is bounded below by zero.
      if (!leaving) throw std::logic_error("unbounded phase-one objective");
      pivot(*leaving, *entering);
    }
    return z[cols_] == 0;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational p = table_[row][col];
    for (auto& e : table_[row]) e /= p;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == row || table_[r][col] == 0) continue;
      const Rational factor = table_[r][col];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (table_[row][j] != 0) table_[r][j] -= factor * table_[row][j];
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> table_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// q ∈ conv(cloud), decided by exact linear feasibility.
inline bool hull_membership(const RationalVector& q, const PointCloud& cloud) {
  if (cloud.points.empty()) throw std::invalid_argument("empty point cloud");
  if (static_cast<int>(q.dimension()) != cloud.n) {
    throw std::invalid_argument("query dimension does not match the cloud");
  }
  return detail::FeasibilitySimplex(q, cloud.points).feasible();
}

inline bool hull_membership(const ExponentVector& q, const PointCloud& cloud) {
  return hull_membership(RationalVector(q), cloud);
}

/// Result of the geometric SNP check. `hull_points` lists every lattice point
/// of Newton(f) examined before the verdict (all of them when saturated).
struct SnpVerdict {
  bool saturated = true;
  std::optional<ExponentVector> witness;
  std::set<ExponentVector> hull_points;

  explicit operator bool() const noexcept { return saturated; }
};

/// Sweeps the bounding box of support(f), testing each lattice point against
/// the hull of the support. `jobs` > 1 sweeps slices of
/// the box (by first coordinate) concurrently.
inline SnpVerdict snp_check_bruteforce(const SparsePolynomial& f, int jobs = 1) {
  if (f.is_zero()) throw std::invalid_argument("SNP check of the zero polynomial");
  const int n = f.ambient();
  const PointCloud cloud = PointCloud::of(n, f.support());
  if (n == 0) {
    SnpVerdict out;
    out.hull_points.insert(ExponentVector{});
    return out;
  }
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> high(static_cast<std::size_t>(n), 0);
  for (int d = 0; d < n; ++d) {
    const auto i = static_cast<std::size_t>(d);
    low[i] = high[i] = cloud.points.front()[i];
    for (const auto& p : cloud.points) {
      low[i] = std::min(low[i], p[i]);
      high[i] = std::max(high[i], p[i]);
    }
  }
  // Sweeps all points with first coordinate `first`, in lex order.
  auto sweep_slice = [&](int first) {
    SnpVerdict out;
    std::vector<int> v(static_cast<std::size_t>(n));
    v[0] = first;
    auto visit = [&](auto&& self, int d) -> bool {
      if (d == n) {
        ExponentVector point(v);
        const bool present = f.coefficient(point) != 0;
        if (present || hull_membership(point, cloud)) {
          out.hull_points.insert(point);
          if (!present) {
            out.saturated = false;
            out.witness = std::move(point);
            return false;
          }
        }
        return true;
      }
      const auto i = static_cast<std::size_t>(d);
      for (int e = low[i]; e <= high[i]; ++e) {
        v[i] = e;
        if (!self(self, d + 1)) return false;
      }
      return true;
    };
    visit(visit, 1);
    return out;
  };

  std::vector<SnpVerdict> slices;
  if (jobs <= 1) {
    for (int first = low[0]; first <= high[0]; ++first) {
      slices.push_back(sweep_slice(first));
      if (!slices.back().saturated) break;
    }
  } else {
    // At most `jobs` slices in flight.
    for (int wave = low[0]; wave <= high[0]; wave += jobs) {
      std::vector<std::future<SnpVerdict>> pending;
      for (int first = wave; first < wave + jobs && first <= high[0]; ++first) {
        pending.push_back(std::async(std::launch::async, sweep_slice, first));
      }
      for (auto& p : pending) slices.push_back(p.get());
    }
  }

  // Merge in lex order so the witness is the same for any job count.
  SnpVerdict out;
  for (auto& slice : slices) {
    out.hull_points.merge(slice.hull_points);
    if (!slice.saturated) {
      out.saturated = false;
      out.witness = slice.witness;
      break;
    }
  }
  return out;
}

/// Lattice points of ⋃_k P_{μ^(k)}.
inline std::set<ExponentVector> chain_lattice_points(const MuChain& chain) {
  std::set<ExponentVector> out;
  for (const auto& mu : chain.mus) out.merge(Permutahedron(mu, chain.n).lattice_points());
  return out;
}

/// Per-degree comparison of support(G_λ) with permutahedron lattice points.
struct NewtonVerdict {
  bool passed = true;
  MuChain chain;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }
};

/// support(G_λ[|λ|+k]) equals the lattice points of P_{μ^(k)} for every k,
/// and G_λ has no terms outside degrees |λ|..|λ|+N.
inline NewtonVerdict snp_check_symmetric_fast(const SparsePolynomial& g, const Partition& lambda,
                                              int n) {
  NewtonVerdict out{true, mu_chain(lambda, n), {}};
  const int base = lambda.size();
  const int top = base + out.chain.length();
  const auto [lo, hi] = g.degree_range();
  if (g.is_zero() || lo != base || hi != top) {
    out.passed = false;
    out.detail = "degree range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                 "] differs from chain range [" + std::to_string(base) + ", " +
                 std::to_string(top) + "]";
    return out;
  }
  for (int k = 0; k <= out.chain.length(); ++k) {
    const auto support = g.homogeneous_component(base + k).support();
    const auto points = Permutahedron(out.chain.at(k), n).lattice_points();
    if (support != points) {
      std::vector<ExponentVector> diff;
      std::set_symmetric_difference(support.begin(), support.end(), points.begin(),
                                    points.end(), std::back_inserter(diff));
      out.passed = false;
      out.detail = "degree " + std::to_string(base + k) + ": support and P_" +
                   out.chain.at(k).to_string() + " differ at " + diff.front().to_string();
      return out;
    }
  }
  return out;
}

inline NewtonVerdict snp_check_symmetric_fast(const Partition& lambda, int n) {
  return snp_check_symmetric_fast(grothendieck_lenart(lambda, n), lambda, n);
}

}  // namespace sgroth

#endif  // SGROTH_POLYTOPE_HPP
