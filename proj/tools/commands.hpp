// commands.hpp
// Experiment drivers behind the `pauli` command-line tool. Each returns a
// report; main() handles parsing, output files and exit codes.

#pragma once

#include "pauli/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pauli::cli {

struct CommonOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> csv_dir;
  int threads = 1;
};

struct GaussCheckOptions {
  std::vector<std::int64_t> primes{3, 5, 7, 11, 13};
  double tol = 1e-12;
};

struct ObstructionOptions {
  std::int64_t n_min = 2;
  std::int64_t n_max = 16;
};

struct GaussianOrbitsOptions {
  std::vector<double> mu{0.6, 0.8};
  double tol = kGaussianVerifyTolerance;
};

struct ContinuumOptions {
  std::string which = "reflect";  // chirp | reflect | kontsevich | spherical
  std::optional<Index> points;
  std::optional<double> extent;
  double alpha = 1.0;             // chirp
  double alpha1 = 1.0;            // kontsevich
  double alpha2 = 1.0;
  std::string rotation = "x1-quarter";  // x1-quarter | identity | flip3
  std::string profile = "chirped";      // spherical: chirped | gaussian
  std::optional<double> momentum_tol;
  std::optional<double> min_distance;
};

struct SolverOptions {
  Index dim = 7;
  std::vector<std::string> frames{"delta", "character"};
  int max_iters = 500;
  int restarts = 20;
  double tol = 1e-8;
  double member_tol = kDefaultMembershipTolerance;
  double threshold = 1e-2;
  bool trace = false;
};

struct SolveOptions {
  SolverOptions solver;
  std::optional<std::uint64_t> planted_seed;
  std::optional<std::string> profile_csv;
};

struct AmbiguityOptions {
  SolverOptions solver;
  int trials = 20;
  std::string profile = "planted";  // planted | flat
};

struct ConjectureOptions {
  std::string psi = "chirped-gaussian";  // chirped-gaussian | gaussian | shifted
  Index points = 32;
  double extent = 8.0;
  int runs = 50;
  int max_iters = 2000;
  int restarts = 20;
  double tol = 1e-8;
  double threshold = 1e-2;
  bool refine = true;
};

/// Frame spec: delta | character | random:<seed>.
FrameSet build_frames(const std::vector<std::string>& specs, Index dim);

ExperimentReport cmd_gauss_check(const GaussCheckOptions& opt, const CommonOptions& common);
ExperimentReport cmd_obstruction(const ObstructionOptions& opt, const CommonOptions& common);
ExperimentReport cmd_gaussian_orbits(const GaussianOrbitsOptions& opt, const CommonOptions& common);
ExperimentReport cmd_continuum(const ContinuumOptions& opt, const CommonOptions& common);
ExperimentReport cmd_solve(const SolveOptions& opt, const CommonOptions& common);
ExperimentReport cmd_ambiguity(const AmbiguityOptions& opt, const CommonOptions& common);
ExperimentReport cmd_conjecture(const ConjectureOptions& opt, const CommonOptions& common);

/// 0 iff pass, or the report is informational.
int exit_code(const ExperimentReport& r);

}  // namespace pauli::cli
