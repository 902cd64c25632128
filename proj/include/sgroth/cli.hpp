#ifndef SGROTH_CLI_HPP
#define SGROTH_CLI_HPP

// Command dispatch for the `sgroth` tool, separated from argument parsing so
// it can be driven directly from tests.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgroth/groth.hpp"
#include "sgroth/io.hpp"
#include "sgroth/polytope.hpp"
#include "sgroth/sweep.hpp"
#include "sgroth/verify.hpp"

namespace sgroth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<Partition> lambda;
  std::optional<int> n;
  std::optional<std::string> out_path;
  int jobs = 1;
  // snp
  bool brute = false;
  // verify
  bool all = false;
  std::vector<std::string> claims;
  bool lemmas = false;
  int trials = 1000;
  std::uint64_t seed = 1;
  int max_n = 4;
  int max_part = 4;
};

/// "3,1,0" -> (3,1). Empty text is the empty partition.
inline Partition parse_lambda(const std::string& text) {
  std::vector<int> parts;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw UsageError("malformed lambda '" + text + "': '" + token + "' is not an integer");
      }
      if (used != token.size() || value < 0) {
        throw UsageError("malformed lambda '" + text + "': '" + token +
                         "' is not a nonnegative integer");
      }
      parts.push_back(value);
    }
    if (text.back() == ',') throw UsageError("malformed lambda '" + text + "'");
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw UsageError("malformed lambda '" + text + "': parts must be weakly decreasing");
    }
  }
  return Partition(std::move(parts));
}

namespace detail {

inline std::pair<Partition, int> require_case(const RunConfig& cfg) {
  if (!cfg.lambda) throw UsageError(cfg.command + " requires --lambda");
  if (!cfg.n) throw UsageError(cfg.command + " requires --n");
  if (*cfg.n < 1 || *cfg.n > kMaxLabel) {
    throw UsageError("--n must lie in [1, " + std::to_string(kMaxLabel) + "]");
  }
  if (cfg.lambda->length() > *cfg.n) {
    throw UsageError("lambda " + cfg.lambda->to_string() + " has more than n = " +
                     std::to_string(*cfg.n) + " rows");
  }
  return {*cfg.lambda, *cfg.n};
}

inline Json report_json(const CaseReport& r) {
  Json checks = Json::object();
  for (const auto& [name, v] : r.checks) {
    checks[name] = Json{{"passed", v.passed}, {"detail", v.detail}};
  }
  return Json{{"lambda", partition_json(r.lambda, r.n)},
              {"n", r.n},
              {"passed", r.passed()},
              {"checks", std::move(checks)}};
}

inline VerifyOptions verify_options(const RunConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("--trials must be positive");
  VerifyOptions opt;
  if (cfg.all || (cfg.claims.empty() && !cfg.lemmas)) opt = VerifyOptions::all();
  for (const auto& c : cfg.claims) {
    if (c == "a") {
      opt.claim_a = true;
    } else if (c == "b") {
      opt.claim_b = true;
    } else if (c == "c") {
      opt.claim_c = true;
    } else {
      throw UsageError("--claim expects a, b or c, got '" + c + "'");
    }
  }
  opt.lemmas = opt.lemmas || cfg.lemmas;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  return opt;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  const VerifyOptions opt = verify_options(cfg);
  std::vector<Case> cases;
  if (cfg.lambda) {
    auto [lambda, n] = require_case(cfg);
    cases.push_back({lambda, n});
  } else {
    if (cfg.n) throw UsageError("--n without --lambda; use --max-n for sweeps");
    if (cfg.max_n < 1 || cfg.max_n > kMaxLabel || cfg.max_part < 0) {
      throw UsageError("sweep bounds out of range");
    }
    cases = desk_sweep(cfg.max_n, cfg.max_part);
  }
  const auto reports = parallel_map(
      cases, [&](const Case& c) { return verify_case(c.lambda, c.n, opt); }, cfg.jobs);
  bool passed = true;
  Json results = Json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    results.push_back(report_json(r));
  }
  out << Json{{"passed", passed}, {"cases", cases.size()}, {"results", std::move(results)}}.dump()
      << '\n';
  return passed ? kExitOk : kExitFailed;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.jobs < 1) throw UsageError("--jobs must be positive");
  const std::string& cmd = cfg.command;
  if (cmd == "verify") return run_verify(cfg, out);

  if (cmd == "figure-data" && cfg.n && *cfg.n > 3) {
    throw UsageError("figure export limited to n ≤ 3");
  }
  const auto [lambda, n] = require_case(cfg);
  if (cmd == "expand") {
    out << to_json(schur_expansion(lambda, n)).dump() << '\n';
  } else if (cmd == "groth") {
    out << to_json(grothendieck_lenart(lambda, n)).dump() << '\n';
  } else if (cmd == "chain") {
    out << to_json(mu_chain(lambda, n)).dump() << '\n';
  } else if (cmd == "newton") {
    const MuChain chain = mu_chain(lambda, n);
    Json polytopes = Json::array();
    for (const auto& mu : chain.mus) {
      Json p{{"degree", mu.size()}};
      p.update(to_json(Permutahedron(mu, n)));
      polytopes.push_back(std::move(p));
    }
    out << Json{{"lambda", partition_json(lambda, n)}, {"n", n}, {"polytopes", std::move(polytopes)}}
               .dump()
        << '\n';
  } else if (cmd == "snp") {
    const SparsePolynomial g = grothendieck_lenart(lambda, n);
    const MuChain chain = mu_chain(lambda, n);
    Json weights = Json::array();
    for (const auto& mu : chain.mus) weights.push_back(partition_json(mu, n));
    Json result{{"lambda", partition_json(lambda, n)}, {"n", n}};
    bool ok = false;
    if (cfg.brute) {
      const SnpVerdict v = snp_check_bruteforce(g, cfg.jobs);
      ok = v.saturated;
      result["method"] = "brute";
      result["snp"] = ok;
      result["witness"] = v.witness ? Json(v.witness->entries()) : Json(nullptr);
      result["lattice_points"] = points_json(v.hull_points);
    } else {
      const NewtonVerdict v = snp_check_symmetric_fast(g, lambda, n);
      ok = v.passed;
      result["method"] = "fast";
      result["snp"] = ok;
      result["detail"] = v.detail;
    }
    result["polytopes"] = std::move(weights);
    out << result.dump() << '\n';
    return ok ? kExitOk : kExitFailed;
  } else if (cmd == "figure-data") {
    write_figure_csv(out, mu_chain(lambda, n));
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  return kExitOk;
}

}  // namespace detail

/// Executes one command. Output goes to `cfg.out_path` when set, else `out`;
/// diagnostics go to `err`. Returns 0 on success, 1 when a verification
/// fails, 2 on usage errors.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.out_path) {
      std::ostringstream buffer;
      const int status = detail::dispatch(cfg, buffer);
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + *cfg.out_path);
      file << buffer.str();
      return status;
    }
    return detail::dispatch(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sgroth::cli

#endif  // SGROTH_CLI_HPP
