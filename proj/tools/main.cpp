// main.cpp
// pauli: experiment runner. Every subcommand prints one JSON report.

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace pauli;
using namespace pauli::cli;

namespace {

void add_common(CLI::App* sub, CommonOptions& common, std::optional<std::string>& out) {
  sub->add_option("--seed", common.seed, "Master seed")->capture_default_str();
  sub->add_option("--out", out, "Write the JSON report here instead of stdout");
  sub->add_option("--csv-dir", common.csv_dir, "Directory for CSV side files");
  sub->add_option("--threads", common.threads, "Worker threads for restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_solver(CLI::App* sub, SolverOptions& s) {
  sub->add_option("--dim", s.dim, "Hilbert space dimension")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--frames", s.frames, "Frames: delta, character, random:<seed>")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--max-iters", s.max_iters)->capture_default_str();
  sub->add_option("--restarts", s.restarts)->capture_default_str();
  sub->add_option("--tol", s.tol, "Residual tolerance")->capture_default_str();
  sub->add_option("--member-tol", s.member_tol)->capture_default_str();
  sub->add_option("--threshold", s.threshold, "Distinctness threshold")->capture_default_str();
  sub->add_flag("--trace", s.trace, "Record the residual trace");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli state reconstruction experiments"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOptions common;
  std::optional<std::string> out;

  GaussCheckOptions gauss;
  auto* gauss_cmd = app.add_subcommand("gauss-check", "Flat delta and character profiles of Gauss states");
  gauss_cmd->add_option("--primes", gauss.primes, "Odd primes")->delimiter(',')->capture_default_str();
  gauss_cmd->add_option("--tol", gauss.tol)->capture_default_str();
  add_common(gauss_cmd, common, out);

  ObstructionOptions obstruction;
  auto* obstruction_cmd = app.add_subcommand("obstruction", "Binary-embedding count table");
  obstruction_cmd->add_option("--n-min", obstruction.n_min)->capture_default_str();
  obstruction_cmd->add_option("--n-max", obstruction.n_max)->capture_default_str();
  add_common(obstruction_cmd, common, out);

  GaussianOrbitsOptions orbits;
  auto* orbits_cmd = app.add_subcommand("gaussian-orbits", "Gaussian Pauli solutions for given mu");
  orbits_cmd->add_option("--mu", orbits.mu, "Values in (0, 1]")->delimiter(',')->capture_default_str();
  orbits_cmd->add_option("--tol", orbits.tol)->capture_default_str();
  add_common(orbits_cmd, common, out);

  ContinuumOptions continuum;
  auto* continuum_cmd = app.add_subcommand("continuum", "Continuum counterexample constructions");
  continuum_cmd->add_option("--which", continuum.which)
      ->check(CLI::IsMember({"chirp", "reflect", "kontsevich", "spherical"}))
      ->capture_default_str();
  continuum_cmd->add_option("--points", continuum.points, "Grid points per axis");
  continuum_cmd->add_option("--extent", continuum.extent, "Half-width L of the box");
  continuum_cmd->add_option("--alpha", continuum.alpha, "Chirp rate")->capture_default_str();
  continuum_cmd->add_option("--alpha1", continuum.alpha1)->capture_default_str();
  continuum_cmd->add_option("--alpha2", continuum.alpha2)->capture_default_str();
  continuum_cmd->add_option("--rotation", continuum.rotation)
      ->check(CLI::IsMember({"x1-quarter", "identity", "flip3"}))
      ->capture_default_str();
  continuum_cmd->add_option("--profile", continuum.profile)
      ->check(CLI::IsMember({"chirped", "gaussian"}))
      ->capture_default_str();
  continuum_cmd->add_option("--momentum-tol", continuum.momentum_tol);
  continuum_cmd->add_option("--min-distance", continuum.min_distance);
  add_common(continuum_cmd, common, out);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Reconstruct a state from its magnitude profile");
  add_solver(solve_cmd, solve.solver);
  solve_cmd->add_option("--planted-seed", solve.planted_seed, "Seed of the planted state (default: --seed)");
  solve_cmd->add_option("--profile-csv", solve.profile_csv, "Read the profile from CSV instead of planting")
      ->check(CLI::ExistingFile);
  add_common(solve_cmd, common, out);

  AmbiguityOptions ambiguity;
  auto* ambiguity_cmd = app.add_subcommand("ambiguity", "Search for distinct states with equal profiles");
  add_solver(ambiguity_cmd, ambiguity.solver);
  ambiguity_cmd->add_option("--trials", ambiguity.trials)->capture_default_str();
  ambiguity_cmd->add_option("--profile", ambiguity.profile)
      ->check(CLI::IsMember({"planted", "flat"}))
      ->capture_default_str();
  add_common(ambiguity_cmd, common, out);

  ConjectureOptions conjecture;
  auto* conjecture_cmd = app.add_subcommand("conjecture", "Position/momentum reconstruction probe");
  conjecture_cmd->add_option("--psi", conjecture.psi)
      ->check(CLI::IsMember({"chirped-gaussian", "gaussian", "shifted"}))
      ->capture_default_str();
  conjecture_cmd->add_option("--points", conjecture.points)->capture_default_str();
  conjecture_cmd->add_option("--extent", conjecture.extent)->capture_default_str();
  conjecture_cmd->add_option("--runs", conjecture.runs)->capture_default_str();
  conjecture_cmd->add_option("--max-iters", conjecture.max_iters)->capture_default_str();
  conjecture_cmd->add_option("--restarts", conjecture.restarts)->capture_default_str();
  conjecture_cmd->add_option("--tol", conjecture.tol)->capture_default_str();
  conjecture_cmd->add_option("--threshold", conjecture.threshold)->capture_default_str();
  conjecture_cmd->add_flag("!--no-refine", conjecture.refine, "Skip 2N/4N refinement of flagged runs");
  add_common(conjecture_cmd, common, out);

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentReport report;
    if (*gauss_cmd) {
      report = cmd_gauss_check(gauss, common);
    } else if (*obstruction_cmd) {
      report = cmd_obstruction(obstruction, common);
    } else if (*orbits_cmd) {
      report = cmd_gaussian_orbits(orbits, common);
    } else if (*continuum_cmd) {
      report = cmd_continuum(continuum, common);
    } else if (*solve_cmd) {
      report = cmd_solve(solve, common);
    } else if (*ambiguity_cmd) {
      report = cmd_ambiguity(ambiguity, common);
    } else {
      report = cmd_conjecture(conjecture, common);
    }
    const std::string text = report.to_json().dump(2) + "\n";
    if (out) {
      write_text_file(*out, text);
    } else {
      std::cout << text;
    }
    return exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
