#include <iostream>

#include <CLI11.hpp>

#include "orlicz/error.hpp"
#include "orlicz/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-space toolkit and two-solution solver"};
  app.require_subcommand(1);

  std::string config_path, expr;
  std::optional<int> workers;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "experiment config file")->required();
    sub->add_option("--workers", workers, "parallel lambda rows");
    sub->add_option("--tol", tol, "residual tolerance");
    sub->add_option("--seed", seed, "random seed");
  };
  auto* check = app.add_subcommand("check", "hypothesis and index report");
  add_common(check);
  auto* run = app.add_subcommand("run", "solve every lambda row");
  add_common(run);
  auto* norms = app.add_subcommand("norms", "modulars and Luxemburg norms of an expression");
  add_common(norms);
  norms->add_option("expr", expr, "expression in x (and y)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    orlicz::ExperimentConfig cfg = orlicz::load_config(config_path);
    orlicz::apply_overrides(cfg, {workers, tol, seed});
    if (check->parsed()) return orlicz::run_check(cfg, std::cout);
    if (run->parsed()) return orlicz::run_experiment(cfg, std::cerr);
    return orlicz::run_norms(cfg, expr, std::cout);
  } catch (const orlicz::Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == orlicz::ErrorKind::ConfigParse ? 2 : 1;
  }
}
