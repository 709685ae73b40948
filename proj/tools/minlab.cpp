#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "minlab/scenarios.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 1;
  }
  out << content;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minlab: numerical minimality verification for sphere products, "
               "helicoidal symmetry and determinant/Pfaffian hypercones"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list the scenario catalog");

  auto* run = app.add_subcommand("run", "run one verification scenario");
  std::string scenario;
  run->add_option("scenario", scenario, "scenario name (see 'list')")->required();
  minlab::ScenarioConfig config;
  if (const char* env = std::getenv("MINLAB_SEED"))
    config.seed = std::strtoull(env, nullptr, 10);
  double tol_opt = 0.0;
  int n_opt = 0;
  std::string out_path, csv_path;
  run->add_option("--seed", config.seed, "RNG seed");
  run->add_option("--samples", config.samples, "sample count per check");
  auto* tol_flag = run->add_option("--tol", tol_opt, "residual tolerance");
  run->add_option("--mode", config.mode, "derivative mode: ad | fd")
      ->check(CLI::IsMember({"ad", "fd"}));
  auto* n_flag = run->add_option("--n", n_opt, "matrix size for the cone scenarios");
  run->add_option("--p", config.p, "first factor dimension");
  run->add_option("--q", config.q, "second factor dimension");
  run->add_option("--out", out_path, "write the JSON report here");
  run->add_option("--csv", csv_path, "write per-sample residuals as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list->parsed()) {
    for (const auto& info : minlab::scenario_catalog())
      std::printf("%-22s %s\n", info.name.c_str(), info.summary.c_str());
    return 0;
  }

  config.scenario = scenario;
  if (tol_flag->count() > 0) config.tol = tol_opt;
  if (n_flag->count() > 0) config.n = n_opt;

  minlab::ResidualReport report;
  try {
    report = minlab::run_scenario(config);
  } catch (const minlab::SamplingError& e) {
    std::cerr << "sampling error: " << e.what() << " (seed " << config.seed
              << ")\n";
    return 3;
  } catch (const minlab::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (const auto& c : report.checks)
    std::printf("[%s] %-36s max %.3e mean %.3e failures %d/%d\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual,
                c.mean_residual, c.failures, c.samples);
  std::printf("verdict: %s\n", report.verdict ? "pass" : "fail");

  if (!out_path.empty() && write_file(out_path, report.to_json()) != 0) return 2;
  if (!csv_path.empty() && write_file(csv_path, report.to_csv()) != 0) return 2;

  return report.verdict ? 0 : 1;
}
