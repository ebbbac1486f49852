#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"coupled-cavity two-photon exchange simulator"};
  app.require_subcommand(1);

  std::string config_path;
  auto* evolve = app.add_subcommand(
      "evolve", "evolve a scenario config and write a CSV time series");
  evolve->add_option("--config", config_path, "scenario config file")
      ->required();

  std::string out_dir = ".";
  auto* fig1 = app.add_subcommand(
      "fig1", "emit concurrence-vs-time series for xi in {0.1, 0.5, 0.9, 2}");
  fig1->add_option("--out-dir", out_dir, "output directory");

  int n_max = 4;
  unsigned long seed = 20240901UL;
  bool inject = false;
  auto* validate = app.add_subcommand(
      "validate", "run the brute-force cross-checks; exit 0 iff all pass");
  validate->add_option("--n-max", n_max, "largest n for Fock-space checks");
  validate->add_option("--seed", seed, "random seed");
  validate
      ->add_flag("--inject-sign-error", inject,
                 "flip the hopping sign in the reference path (self-test)")
      ->group("");

  std::string scenario;
  double xi = 0.0;
  int k = 0, l = 0;
  auto* transfer = app.add_subcommand(
      "transfer", "print predicted transfer times and exact fidelities");
  transfer
      ->add_option("--scenario", scenario,
                   "one of n2-photon-transfer, n3-photon-transfer, "
                   "n2-max-entanglement, n3-excitation-transfer")
      ->required();
  transfer->add_option("--xi", xi, "hopping strength");
  transfer->add_option("--k", k, "time index (or multiple of pi)");
  transfer->add_option("--l", l, "secondary index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (evolve->parsed()) return cavex::cli::cmd_evolve(config_path);
  if (fig1->parsed()) return cavex::cli::cmd_fig1(out_dir);
  if (validate->parsed()) return cavex::cli::cmd_validate(n_max, seed, inject);
  if (transfer->parsed())
    return cavex::cli::cmd_transfer(scenario, xi, k, l);
  return 2;
}
