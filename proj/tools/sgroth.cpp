#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sgroth/cli.hpp"

int main(int argc, char** argv) {
  using sgroth::cli::RunConfig;
  namespace cli = sgroth::cli;

  CLI::App app{"Symmetric Grothendieck polynomials and their Newton polytopes"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string lambda_text;
  int n = 0;
  std::string out_path;
  app.add_option("--lambda", lambda_text, "partition, comma separated (e.g. 3,1,0)");
  app.add_option("--n", n, "number of variables");
  app.add_option("--out", out_path, "write output to PATH instead of stdout");
  app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->capture_default_str();

  auto* expand = app.add_subcommand("expand", "Schur expansion coefficients a_{lambda,mu}");
  auto* groth = app.add_subcommand("groth", "monomial expansion of G_lambda");
  auto* chain = app.add_subcommand("chain", "greedy chain of dominance-maximal shapes");
  auto* newton = app.add_subcommand("newton", "per-degree permutahedra");
  auto* snp = app.add_subcommand("snp", "saturated Newton polytope check");
  snp->add_flag("--brute", cfg.brute, "decide hull membership by exact linear programming");
  auto* verify = app.add_subcommand("verify", "run the check battery on one case or a sweep");
  verify->add_flag("--all", cfg.all, "every check");
  verify->add_option("--claim", cfg.claims, "a, b or c (repeatable)");
  verify->add_flag("--lemmas", cfg.lemmas, "prefix-sum identities along the chain");
  verify->add_option("--trials", cfg.trials, "random trials per sampled check")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  verify->add_option("--max-n", cfg.max_n, "sweep: largest n")->capture_default_str();
  verify->add_option("--max-part", cfg.max_part, "sweep: largest first part")->capture_default_str();
  auto* figure = app.add_subcommand("figure-data", "CSV of per-degree lattice points (n <= 3)");

  for (auto* sub : {expand, groth, chain, newton, snp, verify, figure}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (app.count("--lambda")) cfg.lambda = cli::parse_lambda(lambda_text);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  if (app.count("--n")) cfg.n = n;
  if (app.count("--out")) cfg.out_path = out_path;
  return cli::run(cfg, std::cout, std::cerr);
}
