// solvers.hpp
// Alternating magnitude projections over a frame set, seeded restarts, and
// search harnesses for distinct states sharing a magnitude profile.
//
// Finding no witness is reported as absence only; it never certifies that
// A(b) is a single ray.

#pragma once

#include "pauli/measurement.hpp"
#include "pauli/statespace.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pauli {

struct SolverConfig {
  int max_iters = 500;
  double tol = 1e-8;
  int restarts = 20;
  std::uint64_t seed = 0;
  double distinctness_threshold = 1e-2;
  // Stop a restart when the residual improves by less than stagnation_delta
  // over stagnation_window iterations.
  int stagnation_window = 50;
  double stagnation_delta = 1e-14;
  bool record_trace = false;
  int threads = 1;

  void validate() const;
};

/// Replace the coefficient magnitudes of x in `frame` by `row`, keeping
/// phases (phase 0 where a coefficient vanishes), and resynthesize.
StateVector project_magnitudes(const StateVector& x, const BasisFrame& frame, const RealVector& row);

struct ReconstructResult {
  StateVector state;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  int restart = 0;             // index of the returned run
  std::vector<double> trace;   // residual after every sweep (when recorded)
};

/// Cyclic projections over all frames from the given start, one sweep per
/// iteration, until residual <= tol, max_iters, or stagnation.
ReconstructResult reconstruct_from(const FrameSet& fs, const MagnitudeProfile& b, const SolverConfig& cfg,
                                   const StateVector& start);

/// Seeded restarts (start of restart r drawn from stream (seed, r)). Returns
/// the first converged restart in index order, else the one with the
/// smallest residual. Independent of cfg.threads.
ReconstructResult reconstruct(const FrameSet& fs, const MagnitudeProfile& b, const SolverConfig& cfg);

struct AmbiguityWitness {
  StateVector x;
  StateVector y;
  MagnitudeProfile profile;
  double residual_x = 0.0;
  double residual_y = 0.0;
  double distance = 0.0;
};

/// Recomputes both residuals and the projective distance from scratch.
bool certify_witness(const AmbiguityWitness& w, const FrameSet& fs, double tol, double threshold = 1e-2);

AmbiguityWitness make_witness(const StateVector& x, const StateVector& y, const FrameSet& fs,
                              const MagnitudeProfile& profile);

/// Plants a random state per trial, reconstructs its profile from an
/// independent seed, and keeps certified pairs (plant, recovered) that are at
/// least cfg.distinctness_threshold apart.
std::vector<AmbiguityWitness> ambiguity_search(const FrameSet& fs, const SolverConfig& cfg, int trials);

struct ProfileSearchResult {
  std::vector<StateVector> members;          // pairwise distinct, certified
  std::vector<AmbiguityWitness> witnesses;   // (members[0], members[k])
  int converged_runs = 0;
  int runs = 0;
};

/// Searches a fixed profile for pairwise distinct members, one reconstruct
/// per trial.
ProfileSearchResult profile_search(const FrameSet& fs, const MagnitudeProfile& b, const SolverConfig& cfg,
                                   int trials);

// --- Position/momentum probe ------------------------------------------------

enum class ProbeClass { Psi, ReflectedConjugate, Other, Unconverged };

std::string to_string(ProbeClass c);

struct ProbeRun {
  ProbeClass cls = ProbeClass::Unconverged;
  double residual = 0.0;
  int iterations = 0;
  double distance_psi = 0.0;
  double distance_reflected = 0.0;
  bool flagged = false;    // Other with residual <= 1e-8
  bool confirmed = false;  // still Other after refinement at 2N and 4N
};

struct ProbeReport {
  Index points = 0;
  double extent = 0.0;
  int psi = 0;
  int reflected_conjugate = 0;
  int other = 0;
  int unconverged = 0;
  int flagged = 0;
  int confirmed = 0;
  bool refinement_available = false;
  double reflected_residual = 0.0;  // residual of psi_1 against psi's profile
  std::vector<ProbeRun> runs;
};

using Sampler = std::function<cplx(double)>;

inline constexpr double kProbeFlagResidual = 1e-8;

FrameSet position_momentum_frames(double extent, Index points);

/// Runs `runs` seeded reconstructions (run r uses seed stream (cfg.seed, r)
/// and cfg.restarts restarts) of psi's position/momentum profile and
/// classifies each converged one as proportional to psi, to
/// reflect_conjugate(psi), or neither. Flagged results are re-solved on 2N
/// and 4N grids sampled from `sampler` (when given) before being counted as
/// confirmed; without a sampler they stay unconfirmed.
ProbeReport conjecture_probe(const GridFunction& psi, const SolverConfig& cfg, int runs = 50,
                             const std::optional<Sampler>& sampler = std::nullopt);

/// Spectral refinement of a 1D grid function onto factor * N points over the
/// same extent (zero padding on the momentum grid).
GridFunction refine_grid(const GridFunction& g, Index factor);

}  // namespace pauli
