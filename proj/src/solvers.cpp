// solvers.cpp

#include "pauli/solvers.hpp"

#include "pauli/constructions.hpp"

#include <algorithm>
#include <future>

namespace pauli {

namespace {

constexpr std::uint64_t kPlantStream = 0x706c616e74ULL;
constexpr std::uint64_t kSearchStream = 0x7365617263ULL;

bool better(const ReconstructResult& a, const ReconstructResult& b) {
  if (a.converged != b.converged) return a.converged;
  if (a.converged) return a.restart < b.restart;
  if (a.residual != b.residual) return a.residual < b.residual;
  return a.restart < b.restart;
}

}  // namespace

void SolverConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("SolverConfig: max_iters must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
  if (restarts < 1) throw std::invalid_argument("SolverConfig: restarts must be >= 1");
  if (!(distinctness_threshold > 0.0 && distinctness_threshold < 1.0)) {
    throw std::invalid_argument("SolverConfig: distinctness_threshold must lie in (0, 1)");
  }
  if (stagnation_window < 1) throw std::invalid_argument("SolverConfig: stagnation_window must be >= 1");
  if (threads < 1) throw std::invalid_argument("SolverConfig: threads must be >= 1");
}

StateVector project_magnitudes(const StateVector& x, const BasisFrame& frame, const RealVector& row) {
  if (row.size() != frame.dim() || x.size() != frame.dim()) {
    throw std::invalid_argument("project_magnitudes: dimension mismatch");
  }
  if ((row.array() < 0.0).any()) throw std::invalid_argument("project_magnitudes: negative target");
  StateVector c = frame.analyze(x);
  for (Index i = 0; i < c.size(); ++i) {
    const double m = std::abs(c(i));
    c(i) = m > 0.0 ? c(i) * (row(i) / m) : cplx(row(i), 0.0);
  }
  return frame.synthesize(c);
}

ReconstructResult reconstruct_from(const FrameSet& fs, const MagnitudeProfile& b, const SolverConfig& cfg,
                                   const StateVector& start) {
  cfg.validate();
  if (b.frames() != fs.size() || b.dim() != fs.dim() || start.size() != fs.dim()) {
    throw std::invalid_argument("reconstruct: shape mismatch");
  }
  std::vector<RealVector> rows;
  for (Index nu = 0; nu < fs.size(); ++nu) rows.emplace_back(b.values.row(nu).transpose());

  ReconstructResult out;
  StateVector x = start;
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(cfg.max_iters));
  out.residual = INFINITY;
  for (int it = 1; it <= cfg.max_iters; ++it) {
    for (Index nu = 0; nu < fs.size(); ++nu) x = project_magnitudes(x, fs[nu], rows[static_cast<std::size_t>(nu)]);
    const double r = residual(x, fs, b);
    history.push_back(r);
    out.iterations = it;
    if (r < out.residual) {
      out.residual = r;
      out.state = x;
    }
    if (r <= cfg.tol) break;
    if (it > cfg.stagnation_window &&
        history[static_cast<std::size_t>(it - 1 - cfg.stagnation_window)] - r < cfg.stagnation_delta) {
      break;
    }
  }
  out.converged = out.residual <= cfg.tol;
  if (cfg.record_trace) out.trace = std::move(history);
  return out;
}

ReconstructResult reconstruct(const FrameSet& fs, const MagnitudeProfile& b, const SolverConfig& cfg) {
  cfg.validate();
  const auto run = [&](int r) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(r));
    ReconstructResult res = reconstruct_from(fs, b, cfg, random_state(fs.dim(), rng));
    res.restart = r;
    return res;
  };

  std::optional<ReconstructResult> best;
  for (int first = 0; first < cfg.restarts; first += cfg.threads) {
    const int last = std::min(cfg.restarts, first + cfg.threads);
    std::vector<ReconstructResult> batch;
    if (cfg.threads == 1) {
      batch.push_back(run(first));
    } else {
      std::vector<std::future<ReconstructResult>> jobs;
      for (int r = first; r < last; ++r) jobs.push_back(std::async(std::launch::async, run, r));
      for (auto& j : jobs) batch.push_back(j.get());
    }
    for (auto& res : batch) {
      if (!best || better(res, *best)) best = std::move(res);
    }
    if (best->converged) break;
  }
  return std::move(*best);
}

AmbiguityWitness make_witness(const StateVector& x, const StateVector& y, const FrameSet& fs,
                              const MagnitudeProfile& profile) {
  AmbiguityWitness w;
  w.x = x;
  w.y = y;
  w.profile = profile;
  w.residual_x = residual(x, fs, profile);
  w.residual_y = residual(y, fs, profile);
  w.distance = projective_distance(x, y);
  return w;
}

bool certify_witness(const AmbiguityWitness& w, const FrameSet& fs, double tol, double threshold) {
  if (w.x.size() != fs.dim() || w.y.size() != fs.dim()) return false;
  if (w.profile.frames() != fs.size() || w.profile.dim() != fs.dim()) return false;
  const double rx = residual(w.x, fs, w.profile);
  const double ry = residual(w.y, fs, w.profile);
  return rx <= tol && ry <= tol && projective_distance(w.x, w.y) >= threshold;
}

std::vector<AmbiguityWitness> ambiguity_search(const FrameSet& fs, const SolverConfig& cfg, int trials) {
  cfg.validate();
  if (trials < 1) throw std::invalid_argument("ambiguity_search: trials must be >= 1");
  std::vector<AmbiguityWitness> found;
  for (int t = 0; t < trials; ++t) {
    Rng plant_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)), kPlantStream);
    const StateVector plant = random_state(fs.dim(), plant_rng);
    const MagnitudeProfile b = forward(plant, fs);
    SolverConfig trial_cfg = cfg;
    trial_cfg.seed = derive_seed(cfg.seed ^ kSearchStream, static_cast<std::uint64_t>(t));
    const ReconstructResult rec = reconstruct(fs, b, trial_cfg);
    if (!rec.converged) continue;
    AmbiguityWitness w = make_witness(plant, rec.state, fs, b);
    if (certify_witness(w, fs, cfg.tol, cfg.distinctness_threshold)) found.push_back(std::move(w));
  }
  return found;
}

ProfileSearchResult profile_search(const FrameSet& fs, const MagnitudeProfile& b, const SolverConfig& cfg,
                                   int trials) {
  cfg.validate();
  if (trials < 1) throw std::invalid_argument("profile_search: trials must be >= 1");
  ProfileSearchResult out;
  for (int t = 0; t < trials; ++t) {
    SolverConfig trial_cfg = cfg;
    trial_cfg.seed = derive_seed(cfg.seed ^ kSearchStream, static_cast<std::uint64_t>(t));
    const ReconstructResult rec = reconstruct(fs, b, trial_cfg);
    ++out.runs;
    if (!rec.converged) continue;
    ++out.converged_runs;
    const bool fresh = std::all_of(out.members.begin(), out.members.end(), [&](const StateVector& m) {
      return projective_distance(m, rec.state) >= cfg.distinctness_threshold;
    });
    if (fresh) out.members.push_back(canonical_phase(rec.state) * rec.state.norm());
  }
  for (std::size_t k = 1; k < out.members.size(); ++k) {
    AmbiguityWitness w = make_witness(out.members.front(), out.members[k], fs, b);
    if (certify_witness(w, fs, cfg.tol, cfg.distinctness_threshold)) out.witnesses.push_back(std::move(w));
  }
  return out;
}

std::string to_string(ProbeClass c) {
  switch (c) {
    case ProbeClass::Psi:
      return "psi";
    case ProbeClass::ReflectedConjugate:
      return "psi1";
    case ProbeClass::Other:
      return "other";
    case ProbeClass::Unconverged:
      return "unconverged";
  }
  return "unknown";
}

FrameSet position_momentum_frames(double extent, Index points) {
  return FrameSet({BasisFrame::standard(points, "position"), BasisFrame::grid_momentum(extent, points, "momentum")});
}

GridFunction refine_grid(const GridFunction& g, Index factor) {
  if (g.dim() != 1) throw std::invalid_argument("refine_grid: 1D grid required");
  if (factor < 1) throw std::invalid_argument("refine_grid: factor must be >= 1");
  const GridFunction hat = grid_fourier(g);
  const Index n = g.points();
  const Index fine = n * factor;
  StateVector padded = StateVector::Zero(fine);
  // Momentum spacing is unchanged; the centered block lands in the middle.
  padded.segment(fine / 2 - n / 2, n) = hat.values();
  const GridFunction fine_hat(1, hat.extent() * static_cast<double>(factor), fine, std::move(padded));
  const GridFunction out = grid_fourier(fine_hat, Direction::Inverse);
  return GridFunction(1, g.extent(), fine, out.values());
}

namespace {

ProbeRun classify(const StateVector& state, double res, int iterations, const StateVector& psi,
                  const StateVector& reflected, const SolverConfig& cfg) {
  ProbeRun run;
  run.residual = res;
  run.iterations = iterations;
  run.distance_psi = projective_distance(state, psi);
  run.distance_reflected = projective_distance(state, reflected);
  if (res > cfg.tol) {
    run.cls = ProbeClass::Unconverged;
  } else if (run.distance_psi < cfg.distinctness_threshold) {
    run.cls = ProbeClass::Psi;
  } else if (run.distance_reflected < cfg.distinctness_threshold) {
    run.cls = ProbeClass::ReflectedConjugate;
  } else {
    run.cls = ProbeClass::Other;
    run.flagged = res <= kProbeFlagResidual;
  }
  return run;
}

}  // namespace

ProbeReport conjecture_probe(const GridFunction& psi, const SolverConfig& cfg, int runs,
                             const std::optional<Sampler>& sampler) {
  cfg.validate();
  if (runs < 1) throw std::invalid_argument("conjecture_probe: runs must be >= 1");
  if (psi.dim() != 1) throw std::invalid_argument("conjecture_probe: 1D grid function required");
  if (!(psi.norm() > 0.0)) throw std::invalid_argument("conjecture_probe: zero state");

  const FrameSet fs = position_momentum_frames(psi.extent(), psi.points());
  const MagnitudeProfile b = forward(psi.values(), fs);
  const GridFunction reflected = reflect_conjugate(psi);

  ProbeReport report;
  report.points = psi.points();
  report.extent = psi.extent();
  report.refinement_available = sampler.has_value() && static_cast<bool>(*sampler);
  report.reflected_residual = residual(reflected.values(), fs, b);

  for (int r = 0; r < runs; ++r) {
    SolverConfig run_cfg = cfg;
    run_cfg.seed = derive_seed(cfg.seed ^ kSearchStream, static_cast<std::uint64_t>(r));
    const ReconstructResult rec = reconstruct(fs, b, run_cfg);
    ProbeRun run = classify(rec.state, rec.residual, rec.iterations, psi.values(), reflected.values(), cfg);

    if (run.flagged && report.refinement_available) {
      run.confirmed = true;
      GridFunction candidate(1, psi.extent(), psi.points(), rec.state);
      for (const Index factor : {Index{2}, Index{4}}) {
        const Index fine = psi.points() * factor;
        const GridFunction fine_psi = GridFunction::sample(
            1, psi.extent(), fine, [&](const Eigen::VectorXd& x) { return (*sampler)(x(0)); });
        const FrameSet fine_fs = position_momentum_frames(psi.extent(), fine);
        const MagnitudeProfile fine_b = forward(fine_psi.values(), fine_fs);
        const GridFunction start = refine_grid(candidate, factor);
        const ReconstructResult fine_rec = reconstruct_from(fine_fs, fine_b, cfg, start.values());
        const ProbeRun fine_run = classify(fine_rec.state, fine_rec.residual, fine_rec.iterations,
                                           fine_psi.values(), reflect_conjugate(fine_psi).values(), cfg);
        if (!(fine_run.cls == ProbeClass::Other && fine_run.flagged)) {
          run.confirmed = false;
          break;
        }
      }
    }

    switch (run.cls) {
      case ProbeClass::Psi: ++report.psi; break;
      case ProbeClass::ReflectedConjugate: ++report.reflected_conjugate; break;
      case ProbeClass::Other: ++report.other; break;
      case ProbeClass::Unconverged: ++report.unconverged; break;
    }
    report.flagged += run.flagged ? 1 : 0;
    report.confirmed += run.confirmed ? 1 : 0;
    report.runs.push_back(run);
  }
  return report;
}

}  // namespace pauli
