#ifndef SGROTH_GROTH_HPP
#define SGROTH_GROTH_HPP

// Symmetric Grothendieck polynomials via the Schur expansion with flagged
// skew tableau coefficients and via set-valued tableaux, plus the greedy
// chain of dominance-maximal shapes and executable checks of the
// majorization argument built on it.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgroth/core.hpp"
#include "sgroth/poly.hpp"
#include "sgroth/tableaux.hpp"

namespace sgroth {

/// Outcome of a verification routine. `detail` names the first
/// counterexample on failure and summarizes what was checked on success.
struct Verdict {
  bool passed = true;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }

  static Verdict pass(std::string detail = {}) { return {true, std::move(detail)}; }
  static Verdict fail(std::string detail) { return {false, std::move(detail)}; }
};

inline void require_fits(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (lambda.length() > n) {
    throw std::invalid_argument("partition " + lambda.to_string() +
                                " has more than n = " + std::to_string(n) + " rows");
  }
}

/// Signed count of Lenart tableaux of shape mu/lambda; 0 when mu does not
/// contain lambda or has more than n rows.
inline Integer lenart_coefficient(const Partition& lambda, const Partition& mu, int n) {
  if (!mu.contains(lambda) || mu.length() > n) return 0;
  const Integer count = enumerate_lenart_tableaux(lambda, mu, n).count();
  return (mu.size() - lambda.size()) % 2 == 0 ? count : Integer(-count);
}

/// Every μ with λ_i ≤ μ_i ≤ λ_i + i - 1 for i = 1..n that is a partition.
inline std::vector<Partition> lenart_candidates(const Partition& lambda, int n) {
  require_fits(lambda, n);
  const std::vector<int> base = lambda.padded(n);
  std::vector<Partition> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  auto extend = [&](auto&& self, int row) -> void {
    if (row == n) {
      out.emplace_back(current);
      return;
    }
    const int low = base[static_cast<std::size_t>(row)];
    int high = low + row;
    if (row > 0) high = std::min(high, current[static_cast<std::size_t>(row - 1)]);
    for (int part = low; part <= high; ++part) {
      current[static_cast<std::size_t>(row)] = part;
      self(self, row + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// The a_{λμ} of G_λ = Σ_μ a_{λμ} s_μ, keyed in (|μ|, lex) order.
struct SchurExpansion {
  Partition lambda;
  int n = 0;
  std::map<Partition, Integer> coeffs;

  Integer coefficient(const Partition& mu) const {
    auto it = coeffs.find(mu);
    return it == coeffs.end() ? Integer(0) : it->second;
  }
};

inline SchurExpansion schur_expansion(const Partition& lambda, int n) {
  SchurExpansion out{lambda, n, {}};
  for (const Partition& mu : lenart_candidates(lambda, n)) {
    Integer a = lenart_coefficient(lambda, mu, n);
    if (a != 0) out.coeffs.emplace(mu, std::move(a));
  }
  return out;
}

/// s_λ(x_1..x_n) as the content generating function of SSYT.
inline SparsePolynomial schur_polynomial(const Partition& lambda, int n) {
  // Tableau counts fit in 64 bits: nothing larger is enumerable.
  std::map<ExponentVector, std::int64_t> counts;
  enumerate_ssyt(lambda, n).for_each(
      [&](const Tableau& t) { ++counts[content(t, n)]; });
  SparsePolynomial out(n);
  for (const auto& [alpha, c] : counts) out.add_term(alpha, c);
  return out;
}

/// G_λ(x_1..x_n) assembled as Σ_μ a_{λμ} s_μ.
inline SparsePolynomial grothendieck_lenart(const Partition& lambda, int n) {
  const SchurExpansion expansion = schur_expansion(lambda, n);
  SparsePolynomial out(n);
  for (const auto& [mu, a] : expansion.coeffs) out += a * schur_polynomial(mu, n);
  return out;
}

/// G_λ(x_1..x_n) as Σ_T (-1)^{|T|-|λ|} x^{content(T)} over set-valued T.
inline SparsePolynomial grothendieck_setvalued(const Partition& lambda, int n) {
  require_fits(lambda, n);
  std::map<ExponentVector, std::int64_t> counts;
  const int base = lambda.size();
  enumerate_set_valued(lambda, n).for_each([&](const Tableau& t) {
    counts[content(t, n)] += (t.label_count() - base) % 2 == 0 ? 1 : -1;
  });
  SparsePolynomial out(n);
  for (const auto& [alpha, c] : counts) out.add_term(alpha, c);
  return out;
}

/// The greedy chain μ^(0) = λ ⊂ μ^(1) ⊂ ... ⊂ μ^(N).
struct MuChain {
  int n = 0;
  std::vector<Partition> mus;   // mus[k] = μ^(k)
  std::vector<int> rows;        // rows[k-1] = r_k, 1-based
  std::vector<int> extra_boxes; // extra_boxes[r-1] = b_r, for r = 1..n

  int length() const noexcept { return static_cast<int>(rows.size()); }
  const Partition& lambda() const { return mus.front(); }
  const Partition& at(int k) const { return mus.at(static_cast<std::size_t>(k)); }

  /// ℓ for row r: largest i with r_i = r, or 0 if row r never grows.
  int last_step_in_row(int r) const {
    for (int i = length(); i >= 1; --i) {
      if (rows[static_cast<std::size_t>(i - 1)] == r) return i;
    }
    return 0;
  }
};

/// Repeatedly adds a box in the northmost row r ≤ n with μ_r - λ_r < r - 1
/// where the result is still a partition; stops when no row qualifies.
inline MuChain mu_chain(const Partition& lambda, int n) {
  require_fits(lambda, n);
  const std::vector<int> base = lambda.padded(n);
  std::vector<int> current = base;
  MuChain chain;
  chain.n = n;
  chain.mus.push_back(lambda);
  for (;;) {
    int chosen = 0;
    for (int r = 1; r <= n; ++r) {
      const auto i = static_cast<std::size_t>(r - 1);
      const bool below_flag = current[i] - base[i] < r - 1;
      const bool stays_partition = r == 1 || current[i - 1] > current[i];
      if (below_flag && stays_partition) {
        chosen = r;
        break;
      }
    }
    if (chosen == 0) break;
    ++current[static_cast<std::size_t>(chosen - 1)];
    chain.rows.push_back(chosen);
    chain.mus.emplace_back(current);
  }
  chain.extra_boxes.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < current.size(); ++i) {
    chain.extra_boxes[i] = current[i] - base[i];
  }
  return chain;
}

/// Lenart tableau of shape μ^(k)/λ built by giving each added box the
/// smallest label keeping rows and columns strict.
inline Tableau witness_tableau(const MuChain& chain, int k) {
  if (k < 0 || k > chain.length()) {
    throw std::out_of_range("chain step " + std::to_string(k) + " out of range 0.." +
                            std::to_string(chain.length()));
  }
  Tableau t(chain.at(k), chain.lambda());
  for (int j = 1; j <= k; ++j) {
    const int r = chain.rows[static_cast<std::size_t>(j - 1)];
    const Cell cell{r, chain.at(j).row(r)};
    int label = 1;
    for (Cell nb : {Cell{r, cell.col - 1}, Cell{r - 1, cell.col}}) {
      if (t.in_skew(nb)) label = std::max(label, t.at(nb).max() + 1);
    }
    if (label > r - 1) {
      throw std::logic_error("no admissible label for box in row " + std::to_string(r));
    }
    t.set(cell, LabelSet::singleton(label));
  }
  if (!is_lenart(t, chain.n)) throw std::logic_error("witness tableau failed validation");
  return t;
}

inline Tableau witness_tableau(const Partition& lambda, int n, int k) {
  return witness_tableau(mu_chain(lambda, n), k);
}

/// μ^(k) is the dominance maximum of the degree |λ|+k Schur support, for
/// every k, and nothing lives above degree |λ|+N.
inline Verdict check_claim_a(const SchurExpansion& expansion, const MuChain& chain) {
  const int base = chain.lambda().size();
  for (const auto& [mu, a] : expansion.coeffs) {
    const int k = mu.size() - base;
    if (k < 0 || k > chain.length()) {
      return Verdict::fail("nonzero coefficient at " + mu.to_string() +
                           " outside degrees of the chain");
    }
    if (!dominance_leq(mu, chain.at(k))) {
      return Verdict::fail(mu.to_string() + " not dominated by mu^(" +
                           std::to_string(k) + ") = " + chain.at(k).to_string());
    }
  }
  for (int k = 0; k <= chain.length(); ++k) {
    if (expansion.coefficient(chain.at(k)) == 0) {
      return Verdict::fail("mu^(" + std::to_string(k) + ") = " + chain.at(k).to_string() +
                           " has zero coefficient");
    }
  }
  return Verdict::pass("N = " + std::to_string(chain.length()));
}

inline Verdict check_claim_a(const Partition& lambda, int n) {
  return check_claim_a(schur_expansion(lambda, n), mu_chain(lambda, n));
}

// ---------------------------------------------------------------------------
// Exact-rational sampling for the majorization checks.

/// Denominator bound for sampled weights.
inline constexpr int kWeightDenominator = 10000;

/// Uniformly random composition of `total` into `parts` nonnegative parts.
inline std::vector<int> random_composition(int total, std::size_t parts,
                                           std::mt19937_64& rng) {
  std::vector<int> cuts;
  std::uniform_int_distribution<int> pick(0, total);
  for (std::size_t i = 0; i + 1 < parts; ++i) cuts.push_back(pick(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out;
  int prev = 0;
  for (int c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

/// Random convex weights with a common denominator ≤ 10^4.
inline std::vector<Rational> random_convex_weights(std::size_t count, std::mt19937_64& rng) {
  const int denom = std::uniform_int_distribution<int>(1, kWeightDenominator)(rng);
  std::vector<Rational> out;
  for (int part : random_composition(denom, count, rng)) out.emplace_back(part, denom);
  return out;
}

/// Random convex weights c_0..c_N with Σ k·c_k = target exactly, obtained
/// from the point mass at `target` by mean-preserving spreads.
inline std::vector<Rational> random_weights_with_mean(int top, int target,
                                                      std::mt19937_64& rng) {
  const int denom = std::uniform_int_distribution<int>(1, kWeightDenominator)(rng);
  std::vector<int> mass(static_cast<std::size_t>(top + 1), 0);
  mass[static_cast<std::size_t>(target)] = denom;
  std::uniform_int_distribution<int> index(0, top);
  const int spreads = std::uniform_int_distribution<int>(0, 2 * top + 2)(rng);
  for (int s = 0; s < spreads && top > 0; ++s) {
    const int p = index(rng);
    int i = std::uniform_int_distribution<int>(0, p)(rng);
    int j = std::uniform_int_distribution<int>(p, top)(rng);
    if (i == j) continue;
    // Move (j-i)u units from p to i and j, keeping Σ mass and Σ k·mass.
    const int units = mass[static_cast<std::size_t>(p)] / (j - i);
    if (units == 0) continue;
    const int u = std::uniform_int_distribution<int>(1, units)(rng);
    mass[static_cast<std::size_t>(p)] -= (j - i) * u;
    mass[static_cast<std::size_t>(i)] += (j - p) * u;
    mass[static_cast<std::size_t>(j)] += (p - i) * u;
  }
  std::vector<Rational> out;
  for (int m : mass) out.emplace_back(m, denom);
  return out;
}

/// Random point of the permutahedron P_weight: a convex combination of a few
/// random coordinate permutations of the weight.
inline RationalVector random_permutahedron_point(const Partition& weight, int n,
                                                 std::mt19937_64& rng) {
  const std::vector<int> base = weight.padded(n);
  const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<int> perm = base;
    std::shuffle(perm.begin(), perm.end(), rng);
    vertices.emplace_back(ExponentVector(std::move(perm)));
  }
  return convex_combination(random_convex_weights(count, rng), vertices);
}

inline std::vector<RationalVector> chain_vectors(const MuChain& chain) {
  std::vector<RationalVector> out;
  for (const auto& mu : chain.mus) out.push_back(RationalVector::from_partition(mu, chain.n));
  return out;
}

/// v = Σ c_k v^(k) is majorized by μ̄ = Σ c_k μ^(k), for given points
/// v^(k) ∈ P_{μ^(k)} and convex weights c.
inline Verdict check_claim_b(const MuChain& chain, std::span<const Rational> weights,
                             std::span<const RationalVector> points) {
  const auto vertices = chain_vectors(chain);
  const RationalVector mu_bar = convex_combination(weights, vertices);
  const RationalVector v = convex_combination(weights, points);
  if (!majorizes(sort_decreasing(mu_bar), v)) {
    return Verdict::fail("v = " + v.to_string() + " not majorized by mu_bar = " +
                         mu_bar.to_string());
  }
  return Verdict::pass();
}

inline Verdict check_claim_b(const MuChain& chain, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t steps = chain.mus.size();
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<RationalVector> points;
    for (const auto& mu : chain.mus) points.push_back(random_permutahedron_point(mu, chain.n, rng));
    for (std::size_t k = 0; k < steps; ++k) {
      if (!majorizes(chain.mus[k], points[k])) {
        return Verdict::fail("sampled point " + points[k].to_string() + " escaped P_" +
                             chain.mus[k].to_string());
      }
    }
    const auto weights = random_convex_weights(steps, rng);
    if (auto v = check_claim_b(chain, weights, points); !v) {
      v.detail = "trial " + std::to_string(trial) + ": " + v.detail;
      return v;
    }
  }
  return Verdict::pass(std::to_string(trials) + " trials");
}

/// With K = Σ k·c_k an integer, μ̄ = Σ c_k μ^(k) is majorized by μ^(K).
inline Verdict check_claim_c(const MuChain& chain, std::span<const Rational> weights) {
  Rational mean = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) mean += weights[k] * static_cast<int>(k);
  if (boost::multiprecision::denominator(mean) != 1) {
    throw std::invalid_argument("weights must have an integral first moment");
  }
  const int K = static_cast<int>(boost::multiprecision::numerator(mean));
  const RationalVector mu_bar = convex_combination(weights, chain_vectors(chain));
  if (!majorizes(chain.at(K), mu_bar)) {
    return Verdict::fail("mu_bar = " + mu_bar.to_string() + " not majorized by mu^(" +
                         std::to_string(K) + ") = " + chain.at(K).to_string());
  }
  return Verdict::pass();
}

inline Verdict check_claim_c(const MuChain& chain, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_target(0, chain.length());
  for (int trial = 0; trial < trials; ++trial) {
    const auto weights = random_weights_with_mean(chain.length(), pick_target(rng), rng);
    if (auto v = check_claim_c(chain, weights); !v) {
      v.detail = "trial " + std::to_string(trial) + ": " + v.detail;
      return v;
    }
  }
  return Verdict::pass(std::to_string(trials) + " trials");
}

/// Both closed forms for prefix sums along the chain:
///   Σ_{j≤r} μ̄_j = Σ_{j≤r} λ_j + Σ_i min(i, ℓ_r) c_i, ℓ_r the last step in row r;
///   Σ_{j≤r} μ^(k)_j = Σ_{j≤r} λ_j + Σ_{j≤r} b_j for every k ≥ 1 and r < r_k.
inline Verdict check_lemma_prefix_sums(const MuChain& chain, std::span<const Rational> weights) {
  const int n = chain.n;
  const int N = chain.length();
  const RationalVector mu_bar = convex_combination(weights, chain_vectors(chain));
  const std::vector<int> base = chain.lambda().padded(n);

  Rational bar_prefix = 0;
  int base_prefix = 0;
  for (int r = 1; r <= n; ++r) {
    bar_prefix += mu_bar[static_cast<std::size_t>(r - 1)];
    base_prefix += base[static_cast<std::size_t>(r - 1)];
    const int ell = chain.last_step_in_row(r);
    Rational closed = base_prefix;
    for (int i = 1; i <= N; ++i) closed += std::min(i, ell) * weights[static_cast<std::size_t>(i)];
    if (bar_prefix != closed) {
      return Verdict::fail("prefix sum of mu_bar through row " + std::to_string(r) + " is " +
                           bar_prefix.str() + ", closed form gives " + closed.str());
    }
  }

  for (int k = 1; k <= N; ++k) {
    const std::vector<int> mu = chain.at(k).padded(n);
    const int rk = chain.rows[static_cast<std::size_t>(k - 1)];
    int lhs = 0;
    int rhs = 0;
    for (int r = 1; r < rk; ++r) {
      const auto i = static_cast<std::size_t>(r - 1);
      lhs += mu[i];
      rhs += base[i] + chain.extra_boxes[i];
      if (lhs != rhs) {
        return Verdict::fail("mu^(" + std::to_string(k) + ") prefix through row " +
                             std::to_string(r) + " is " + std::to_string(lhs) +
                             ", expected " + std::to_string(rhs));
      }
    }
  }
  return Verdict::pass();
}

inline Verdict check_lemma_prefix_sums(const MuChain& chain, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const auto weights = random_convex_weights(chain.mus.size(), rng);
    if (auto v = check_lemma_prefix_sums(chain, weights); !v) {
      v.detail = "trial " + std::to_string(trial) + ": " + v.detail;
      return v;
    }
  }
  return Verdict::pass(std::to_string(trials) + " trials");
}

}  // namespace sgroth

#endif  // SGROTH_GROTH_HPP
