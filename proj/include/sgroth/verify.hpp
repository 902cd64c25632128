#ifndef SGROTH_VERIFY_HPP
#define SGROTH_VERIFY_HPP

// The per-(λ, n) check battery behind `verify`.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sgroth/groth.hpp"
#include "sgroth/polytope.hpp"

namespace sgroth {

struct VerifyOptions {
  bool claim_a = false;
  bool claim_b = false;
  bool claim_c = false;
  bool lemmas = false;
  bool newton = false;          // per-degree support = permutahedron lattice points
  bool oracle = false;          // Lenart expansion = set-valued expansion
  bool brute_snp = false;       // geometric SNP, only run for n ≤ 3
  int trials = 1000;
  std::uint64_t seed = 1;

  static VerifyOptions all() {
    VerifyOptions o;
    o.claim_a = o.claim_b = o.claim_c = o.lemmas = o.newton = o.oracle = o.brute_snp = true;
    return o;
  }
};

struct CaseReport {
  Partition lambda;
  int n = 1;
  std::vector<std::pair<std::string, Verdict>> checks;

  bool passed() const {
    for (const auto& [name, v] : checks) {
      if (!v.passed) return false;
    }
    return true;
  }
};

inline CaseReport verify_case(const Partition& lambda, int n, const VerifyOptions& opt) {
  CaseReport report{lambda, n, {}};
  const MuChain chain = mu_chain(lambda, n);
  auto add = [&](std::string name, Verdict v) { report.checks.emplace_back(std::move(name), std::move(v)); };

  if (opt.claim_a) {
    Verdict v = check_claim_a(schur_expansion(lambda, n), chain);
    for (int k = 0; v && k <= chain.length(); ++k) {
      const Tableau w = witness_tableau(chain, k);
      if (!is_lenart(w, n)) v = Verdict::fail("invalid witness at k = " + std::to_string(k));
    }
    add("claim_a", std::move(v));
  }
  if (opt.claim_b) add("claim_b", check_claim_b(chain, opt.trials, opt.seed));
  if (opt.claim_c) add("claim_c", check_claim_c(chain, opt.trials, opt.seed));
  if (opt.lemmas) add("lemmas", check_lemma_prefix_sums(chain, opt.trials, opt.seed));

  if (opt.newton || opt.oracle || (opt.brute_snp && n <= 3)) {
    const SparsePolynomial g = grothendieck_lenart(lambda, n);
    if (opt.newton) {
      NewtonVerdict nv = snp_check_symmetric_fast(g, lambda, n);
      add("newton", nv.passed ? Verdict::pass() : Verdict::fail(nv.detail));
    }
    if (opt.oracle) {
      const bool same = g == grothendieck_setvalued(lambda, n);
      add("oracle", same ? Verdict::pass() : Verdict::fail("Lenart and set-valued polynomials differ"));
    }
    if (opt.brute_snp && n <= 3) {
      const SnpVerdict sv = snp_check_bruteforce(g);
      if (!sv.saturated) {
        add("snp_brute", Verdict::fail("lattice point " + sv.witness->to_string() +
                                       " of Newton(G) is not an exponent"));
      } else if (sv.hull_points != chain_lattice_points(chain)) {
        add("snp_brute", Verdict::fail("hull lattice points differ from the union of permutahedra"));
      } else {
        add("snp_brute", Verdict::pass());
      }
    }
  }
  return report;
}

}  // namespace sgroth

#endif  // SGROTH_VERIFY_HPP
