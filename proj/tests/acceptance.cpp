// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every comparison is exact.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sgroth/cli.hpp"
#include "sgroth/groth.hpp"
#include "sgroth/polytope.hpp"
#include "sgroth/sweep.hpp"

using namespace sgroth;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

struct SweepCase {
  Case c;
  SparsePolynomial g;
  MuChain chain;
};

// λ with ≤ 4 rows and λ_1 ≤ 4, each n with ℓ(λ) ≤ n ≤ 4.
const std::vector<SweepCase>& full_sweep() {
  static const std::vector<SweepCase> cases = [] {
    std::vector<SweepCase> out;
    for (const auto& c : desk_sweep(4, 4)) {
      out.push_back({c, grothendieck_lenart(c.lambda, c.n), mu_chain(c.lambda, c.n)});
    }
    return out;
  }();
  return cases;
}

std::string where(const Case& c) { return c.lambda.to_string() + " n=" + std::to_string(c.n); }

Outcome a1_expansion_310() {
  const auto start = Clock::now();
  cli::RunConfig cfg;
  cfg.command = "expand";
  cfg.lambda = cli::parse_lambda("3,1,0");
  cfg.n = 3;
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run(cfg, out, err) != cli::kExitOk) return {false, err.str()};
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();

  std::map<Partition, long long> got;
  const Json parsed = Json::parse(out.str());
  for (const auto& term : parsed["terms"]) {
    got[Partition(term["mu"].get<std::vector<int>>())] = term["coeff"].get<long long>();
  }
  const std::map<Partition, long long> expected{
      {{3, 1}, 1}, {{3, 1, 1}, -2}, {{3, 2}, -1}, {{3, 2, 1}, 2}, {{3, 2, 2}, -1}};
  if (got != expected) return {false, "expansion differs from the expected five coefficients"};
  if (secs >= 1.0) return {false, "took " + std::to_string(secs) + " s"};
  return {true, "5 coefficients exact, " + std::to_string(secs) + " s"};
}

Outcome a2_componentwise_snp() {
  for (const auto& s : full_sweep()) {
    const auto v = snp_check_symmetric_fast(s.g, s.c.lambda, s.c.n);
    if (!v) return {false, where(s.c) + ": " + v.detail};
  }
  return {true, std::to_string(full_sweep().size()) + " (lambda, n) cases"};
}

Outcome a3_oracle_equivalence() {
  for (const auto& s : full_sweep()) {
    if (s.g != grothendieck_setvalued(s.c.lambda, s.c.n)) {
      return {false, where(s.c) + ": Lenart and set-valued polynomials differ"};
    }
  }
  return {true, std::to_string(full_sweep().size()) + " (lambda, n) cases"};
}

Outcome a4_bruteforce_snp() {
  const auto start = Clock::now();
  int cases = 0;
  for (const auto& c : desk_sweep(3, 4)) {
    const auto g = grothendieck_lenart(c.lambda, c.n);
    const auto v = snp_check_bruteforce(g);
    if (!v) return {false, where(c) + ": hull lattice point " + v.witness->to_string() + " missing"};
    if (v.hull_points != chain_lattice_points(mu_chain(c.lambda, c.n))) {
      return {false, where(c) + ": hull differs from the union of permutahedra"};
    }
    ++cases;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) return {false, "took " + std::to_string(secs) + " s"};
  return {true, std::to_string(cases) + " cases, " + std::to_string(secs) + " s"};
}

Outcome a5_claim_a() {
  for (const auto& s : full_sweep()) {
    const auto v = check_claim_a(schur_expansion(s.c.lambda, s.c.n), s.chain);
    if (!v) return {false, where(s.c) + ": " + v.detail};
    const int top = s.c.lambda.size() + s.chain.length();
    if (s.g.degree_range().second != top) {
      return {false, where(s.c) + ": top degree " + std::to_string(s.g.degree_range().second) +
                         " != |lambda| + N = " + std::to_string(top)};
    }
  }
  return {true, std::to_string(full_sweep().size()) + " cases; top degree = |lambda| + N"};
}

Outcome a6_claims_b_c_lemmas() {
  const auto start = Clock::now();
  constexpr int kTrials = 1000;
  for (const Case& c : {Case{{3, 1, 0}, 3}, Case{{4, 2, 1, 0}, 4}}) {
    const auto chain = mu_chain(c.lambda, c.n);
    if (auto v = check_claim_b(chain, kTrials, 1); !v) return {false, where(c) + " claim B: " + v.detail};
    if (auto v = check_claim_c(chain, kTrials, 2); !v) return {false, where(c) + " claim C: " + v.detail};
    if (auto v = check_lemma_prefix_sums(chain, kTrials, 3); !v) {
      return {false, where(c) + " lemmas: " + v.detail};
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) return {false, "took " + std::to_string(secs) + " s"};
  return {true, "2 chains x 3 checks x 1000 trials, " + std::to_string(secs) + " s"};
}

Outcome a7_rado() {
  const auto start = Clock::now();
  int pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int size = 0; size <= 7; ++size) {
      const auto parts = partitions_of(size, n);
      std::map<Partition, std::set<ExponentVector>> lattice;
      std::map<Partition, std::set<ExponentVector>> vertices;
      for (const auto& p : parts) {
        lattice[p] = Permutahedron(p, n).lattice_points();
        vertices[p] = Permutahedron(p, n).vertices();
      }
      for (const auto& theta : parts) {
        for (const auto& delta : parts) {
          const bool dominance = rado_contains(theta, delta);
          const auto& inner = lattice[theta];
          const auto& outer = lattice[delta];
          const bool lattice_subset = std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
          const PointCloud hull = PointCloud::of(n, vertices[delta]);
          bool vertices_inside = true;
          for (const auto& v : vertices[theta]) vertices_inside = vertices_inside && hull_membership(v, hull);
          if (dominance != lattice_subset || dominance != vertices_inside) {
            return {false, theta.to_string() + " vs " + delta.to_string() + " n=" + std::to_string(n)};
          }
          ++pairs;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 60.0) return {false, "took " + std::to_string(secs) + " s"};
  return {true, std::to_string(pairs) + " ordered pairs, " + std::to_string(secs) + " s"};
}

Outcome a8_schur_newton() {
  for (const auto& s : full_sweep()) {
    if (schur_polynomial(s.c.lambda, s.c.n).support() !=
        Permutahedron(s.c.lambda, s.c.n).lattice_points()) {
      return {false, where(s.c) + ": support(s_lambda) differs from P_lambda"};
    }
  }
  return {true, std::to_string(full_sweep().size()) + " cases"};
}

Outcome a9_figure() {
  cli::RunConfig cfg;
  cfg.command = "figure-data";
  cfg.lambda = cli::parse_lambda("3,1,0");
  cfg.n = 3;
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run(cfg, out, err) != cli::kExitOk) return {false, err.str()};

  std::map<int, std::set<ExponentVector>> by_degree;
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  if (line != "x,y,z,degree") return {false, "missing header"};
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    std::vector<int> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(std::stoi(cell));
    if (fields.size() != 4) return {false, "malformed row " + line};
    by_degree[fields[3]].insert(ExponentVector({fields[0], fields[1], fields[2]}));
    ++rows;
  }
  const std::vector<Partition> weights{{3, 1, 0}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2}};
  if (by_degree.size() != weights.size()) return {false, "expected degrees 4..7"};
  std::size_t expected_rows = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const auto points = Permutahedron(weights[k], 3).lattice_points();
    expected_rows += points.size();
    if (by_degree[4 + static_cast<int>(k)] != points) {
      return {false, "degree " + std::to_string(4 + k) + " differs from P_" + weights[k].to_string()};
    }
  }
  if (rows != expected_rows) return {false, "duplicate rows"};
  return {true, std::to_string(rows) + " rows over degrees 4..7"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"A1 expansion of (3,1,0)", a1_expansion_310},
      {"A2 componentwise SNP", a2_componentwise_snp},
      {"A3 oracle equivalence", a3_oracle_equivalence},
      {"A4 full SNP via geometry", a4_bruteforce_snp},
      {"A5 claim A and top degree", a5_claim_a},
      {"A6 claims B/C and lemmas", a6_claims_b_c_lemmas},
      {"A7 Rado containment", a7_rado},
      {"A8 Newton(s_lambda) = P_lambda", a8_schur_newton},
      {"A9 figure data", a9_figure},
  };
  int failures = 0;
  for (const auto& [name, criterion] : criteria) {
    Outcome o{false, ""};
    try {
      o = criterion();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " -- " << o.detail << std::endl;
    if (!o.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
