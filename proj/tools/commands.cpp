// commands.cpp

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace pauli::cli {

namespace {

namespace fs = std::filesystem;

template <typename F>
ExperimentReport timed(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport r = body();
  const auto t1 = std::chrono::steady_clock::now();
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

void write_csv(const CommonOptions& common, const std::string& name, const auto& writer) {
  if (!common.csv_dir) return;
  std::ostringstream os;
  writer(os);
  write_text_file(fs::path(*common.csv_dir) / name, os.str());
}

SolverConfig solver_config(const SolverOptions& s, const CommonOptions& common) {
  SolverConfig cfg;
  cfg.max_iters = s.max_iters;
  cfg.restarts = s.restarts;
  cfg.tol = s.tol;
  cfg.seed = common.seed;
  cfg.distinctness_threshold = s.threshold;
  cfg.record_trace = s.trace;
  cfg.threads = common.threads;
  cfg.validate();
  return cfg;
}

json solver_params(const SolverOptions& s) {
  return json{{"dim", s.dim},
              {"frames", s.frames},
              {"max_iters", s.max_iters},
              {"restarts", s.restarts},
              {"tol", s.tol},
              {"member_tol", s.member_tol},
              {"distinctness_threshold", s.threshold}};
}

double pairwise_min_distance(const std::vector<StateVector>& states, double* max_out = nullptr) {
  double lo = 1.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      const double d = projective_distance(states[i], states[j]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  if (max_out) *max_out = hi;
  return lo;
}

}  // namespace

int exit_code(const ExperimentReport& r) { return (r.pass || r.informational) ? 0 : 1; }

FrameSet build_frames(const std::vector<std::string>& specs, Index dim) {
  if (specs.empty()) throw std::invalid_argument("at least one frame is required");
  std::vector<BasisFrame> frames;
  for (const auto& s : specs) {
    if (s == "delta") {
      frames.push_back(BasisFrame::standard(dim, "delta"));
    } else if (s == "character") {
      frames.push_back(BasisFrame::character(dim, "character"));
    } else if (s.rfind("random:", 0) == 0) {
      const auto seed = std::stoull(s.substr(7));
      frames.push_back(BasisFrame::random_unitary(dim, seed, s));
    } else {
      throw std::invalid_argument("unknown frame '" + s + "' (expected delta, character or random:<seed>)");
    }
  }
  return FrameSet(std::move(frames));
}

ExperimentReport cmd_gauss_check(const GaussCheckOptions& opt, const CommonOptions& common) {
  for (auto p : opt.primes) {
    if (!is_odd_prime(p)) throw std::invalid_argument("--primes: " + std::to_string(p) + " is not an odd prime");
  }
  if (opt.primes.empty()) throw std::invalid_argument("--primes: empty list");
  return timed([&] {
    ExperimentReport r;
    r.experiment = "gauss-check";
    r.seed = common.seed;
    r.params = json{{"primes", opt.primes}, {"tol", opt.tol}};
    json rows = json::array();
    r.pass = true;
    for (auto p : opt.primes) {
      const Prop2Report rep = verify_prop2(p, opt.tol);
      rows.push_back(to_json(rep));
      r.pass = r.pass && rep.pass;
      write_csv(common, "gauss_profile_p" + std::to_string(p) + ".csv", [&](std::ostream& os) {
        write_profile_csv(os, forward(gauss_state({p, 1}), delta_character_frames(p)));
      });
    }
    r.outputs["primes"] = rows;
    return r;
  });
}

ExperimentReport cmd_obstruction(const ObstructionOptions& opt, const CommonOptions& common) {
  if (opt.n_min < 2 || opt.n_max < opt.n_min) throw std::invalid_argument("obstruction: need 2 <= n-min <= n-max");
  return timed([&] {
    ExperimentReport r;
    r.experiment = "obstruction";
    r.seed = common.seed;
    r.params = json{{"n_min", opt.n_min}, {"n_max", opt.n_max}};
    json rows = json::array();
    std::vector<std::int64_t> holds_below_9;
    std::vector<std::int64_t> fails_below_9;
    std::optional<std::int64_t> holds_from_9;
    for (std::int64_t n = opt.n_min; n <= opt.n_max; ++n) {
      const ObstructionRow row = embedding_obstruction(n);
      rows.push_back(to_json(row));
      if (n <= 8) {
        (row.inequality_holds ? holds_below_9 : fails_below_9).push_back(n);
      } else if (row.inequality_holds && !holds_from_9) {
        holds_from_9 = n;
      }
    }
    r.outputs["rows"] = rows;
    r.outputs["holds_below_9"] = holds_below_9;
    // n = 5 and n = 7 sit on the boundary (lhs == rhs) of the strict inequality.
    r.outputs["fails_below_9"] = fails_below_9;
    r.outputs["fails_for_all_n_from_9"] = !holds_from_9.has_value();
    r.pass = !holds_from_9.has_value();
    write_csv(common, "obstruction.csv", [&](std::ostream& os) {
      os << "n,lhs,rhs,holds\n";
      for (const auto& row : rows) {
        os << row["n"] << ',' << row["lhs"] << ',' << row["rhs"] << ',' << row["holds"] << '\n';
      }
    });
    return r;
  });
}

ExperimentReport cmd_gaussian_orbits(const GaussianOrbitsOptions& opt, const CommonOptions& common) {
  GaussianMagnitudeData data{Eigen::Map<const RealVector>(opt.mu.data(), static_cast<Index>(opt.mu.size()))};
  data.validate();
  return timed([&] {
    ExperimentReport r;
    r.experiment = "gaussian-orbits";
    r.seed = common.seed;
    r.params = json{{"mu", opt.mu}, {"tol", opt.tol}};
    const OrbitSet orbits = solve_gaussian_pauli(data);
    r.outputs["orbits"] = to_json(orbits);
    r.outputs["b"] = data.b();
    r.outputs["representative_count"] = orbits.representatives.size();

    r.pass = true;
    json verifications = json::array();
    for (const auto& rep : orbits.representatives) {
      const GaussianVerification v = verify_gaussian_solution(rep.A2, data, opt.tol);
      verifications.push_back(to_json(v));
      r.pass = r.pass && v.pass;
    }
    r.outputs["verifications"] = verifications;

    // Continuous orbits: sigma^T D sigma for commutant rotations of mixed-sign blocks.
    json continuous = json::array();
    for (std::size_t b = 0; b < orbits.blocks.size(); ++b) {
      const auto& block = orbits.blocks[b];
      if (block.indices.size() < 2 || !(block.lambda > 0.0)) continue;
      for (std::size_t k = 0; k < orbits.representatives.size(); ++k) {
        const auto& rep = orbits.representatives[k];
        if (rep.signs(block.indices[0]) == rep.signs(block.indices[1])) continue;
        int verified = 0;
        double worst = 0.0;
        const std::vector<double> angles{0.3, 0.7, 1.1};
        for (double angle : angles) {
          const RealMatrix sigma = orbits.commutant_rotation(b, angle);
          const GaussianVerification v = verify_gaussian_solution(sigma.transpose() * rep.A2 * sigma, data, opt.tol);
          worst = std::max({worst, v.matrix_residual, v.ratio_deviation, v.relation_residual});
          verified += v.pass ? 1 : 0;
          r.pass = r.pass && v.pass;
        }
        continuous.push_back(json{{"block", b},
                                  {"representative", k},
                                  {"angles", angles},
                                  {"verified", verified},
                                  {"max_residual", worst}});
      }
    }
    r.outputs["continuous_orbits"] = continuous;
    return r;
  });
}

ExperimentReport cmd_continuum(const ContinuumOptions& opt, const CommonOptions& common) {
  return timed([&] {
    ExperimentReport r;
    r.experiment = "continuum";
    r.seed = common.seed;
    const std::string& which = opt.which;

    if (which == "chirp") {
      const GridParams grid{opt.extent.value_or(40.0), opt.points.value_or(4096)};
      r.params = json{{"which", which}, {"alpha", opt.alpha}, {"extent", grid.extent}, {"points", grid.points}};
      const ChirpFlatness f = chirp_flatness({opt.alpha}, grid);
      r.outputs = to_json(f);
      r.outputs["within_20_percent"] = f.max_relative_deviation <= 0.2;
      r.outputs["note"] = "f(x) = exp(i alpha x^2) is not square-integrable; flatness is qualitative";
      r.informational = true;
      write_csv(common, "chirp.csv", [&](std::ostream& os) { write_grid_csv(os, chirp({opt.alpha}, grid).samples); });
      return r;
    }

    StatePair pair = [&] {
      if (which == "reflect") {
        const GridParams grid{opt.extent.value_or(kDefaultGrid1D.extent), opt.points.value_or(kDefaultGrid1D.points)};
        r.params = json{{"which", which}, {"psi", "exp(-x^2/2) exp(i(x - x^2))"}, {"extent", grid.extent},
                        {"points", grid.points}};
        GridFunction psi = GridFunction::sample(1, grid.extent, grid.points, [](const Eigen::VectorXd& x) {
          const double t = x(0);
          return std::exp(-0.5 * t * t) * std::polar(1.0, t - t * t);
        });
        GridFunction partner = reflect_conjugate(psi);
        return StatePair{std::move(psi), std::move(partner)};
      }
      if (which == "kontsevich") {
        const GridParams grid{opt.extent.value_or(kDefaultGrid3D.extent), opt.points.value_or(kDefaultGrid3D.points)};
        KontsevichSpec spec;
        spec.alpha1 = opt.alpha1;
        spec.alpha2 = opt.alpha2;
        if (opt.rotation == "x1-quarter") {
          spec.rotation = axis_rotation(0, std::numbers::pi / 2);
        } else if (opt.rotation == "identity") {
          spec.rotation = Eigen::Matrix3d::Identity();
        } else if (opt.rotation == "flip3") {
          spec.rotation = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
        } else {
          throw std::invalid_argument("--rotation must be x1-quarter, identity or flip3");
        }
        r.params = json{{"which", which}, {"alpha1", opt.alpha1}, {"alpha2", opt.alpha2}, {"rotation", opt.rotation},
                        {"extent", grid.extent}, {"points", grid.points}};
        return kontsevich_pair(spec, grid);
      }
      if (which == "spherical") {
        const GridParams grid{opt.extent.value_or(kDefaultGrid3D.extent), opt.points.value_or(kDefaultGrid3D.points)};
        RadialProfile profile;
        if (opt.profile == "chirped") {
          profile = [](double rr) { return std::exp(cplx(-0.5 * rr * rr, rr * rr)); };
        } else if (opt.profile == "gaussian") {
          profile = [](double rr) { return cplx(std::exp(-rr * rr), 0.0); };
        } else {
          throw std::invalid_argument("--profile must be chirped or gaussian");
        }
        r.params = json{{"which", which}, {"profile", opt.profile}, {"extent", grid.extent}, {"points", grid.points}};
        return spherical_conjugate_pair(profile, grid);
      }
      throw std::invalid_argument("continuum: --which must be chirp, reflect, kontsevich or spherical");
    }();

    const bool relative = which == "kontsevich";
    const double tol = opt.momentum_tol.value_or(relative ? 1e-6 : 1e-8);
    const double min_distance =
        opt.min_distance.value_or(which == "reflect" ? 0.05 : which == "kontsevich" ? 0.1 : 0.0);
    const PairCertificate cert = certify_pair(pair, 1e-6);
    r.params["momentum_tol"] = tol;
    r.params["momentum_metric"] = relative ? "relative" : "absolute";
    r.params["min_distance"] = min_distance;
    r.outputs = to_json(cert);
    const double momentum = relative ? cert.max_momentum_relative_deviation : cert.max_momentum_deviation;
    r.pass = cert.position_bitwise_equal && momentum <= tol &&
             (which == "kontsevich" ? cert.projective_distance > min_distance
                                    : cert.projective_distance >= min_distance);
    write_csv(common, which + "_first.csv", [&](std::ostream& os) { write_grid_csv(os, pair.first); });
    write_csv(common, which + "_second.csv", [&](std::ostream& os) { write_grid_csv(os, pair.second); });
    return r;
  });
}

ExperimentReport cmd_solve(const SolveOptions& opt, const CommonOptions& common) {
  const SolverConfig cfg = solver_config(opt.solver, common);
  return timed([&] {
    ExperimentReport r;
    r.experiment = "solve";
    r.seed = common.seed;
    r.params = solver_params(opt.solver);
    const FrameSet frames = build_frames(opt.solver.frames, opt.solver.dim);

    MagnitudeProfile b;
    std::optional<StateVector> plant;
    if (opt.profile_csv) {
      std::ifstream in(*opt.profile_csv);
      if (!in) throw std::runtime_error("cannot read profile '" + *opt.profile_csv + "'");
      b = read_profile_csv(in);
      r.params["profile_csv"] = *opt.profile_csv;
    } else {
      const std::uint64_t ps = opt.planted_seed.value_or(common.seed);
      Rng rng(ps, 0x706c616e74ULL);
      plant = random_state(opt.solver.dim, rng);
      b = forward(*plant, frames);
      r.params["planted_seed"] = ps;
      r.outputs["planted"] = to_json(*plant);
    }
    const ReconstructResult rec = reconstruct(frames, b, cfg);
    r.outputs["profile"] = to_json(b);
    r.outputs["result"] = to_json(rec);
    const bool member = rec.state.size() > 0 && is_member(rec.state, frames, b, opt.solver.member_tol);
    r.outputs["is_member"] = member;
    if (plant) r.outputs["distance_to_planted"] = projective_distance(*plant, rec.state);
    r.pass = rec.converged && member;
    write_csv(common, "profile.csv", [&](std::ostream& os) { write_profile_csv(os, b); });
    return r;
  });
}

ExperimentReport cmd_ambiguity(const AmbiguityOptions& opt, const CommonOptions& common) {
  const SolverConfig cfg = solver_config(opt.solver, common);
  if (opt.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  return timed([&] {
    ExperimentReport r;
    r.experiment = "ambiguity";
    r.seed = common.seed;
    r.params = solver_params(opt.solver);
    r.params["trials"] = opt.trials;
    r.params["profile"] = opt.profile;
    const FrameSet frames = build_frames(opt.solver.frames, opt.solver.dim);
    r.pass = true;

    std::vector<AmbiguityWitness> witnesses;
    if (opt.profile == "planted") {
      witnesses = ambiguity_search(frames, cfg, opt.trials);
      r.outputs["note"] = "an empty witness list is absence of evidence, not a uniqueness proof";
    } else if (opt.profile == "flat") {
      const Index p = opt.solver.dim;
      if (!is_odd_prime(p) || opt.solver.frames != std::vector<std::string>{"delta", "character"}) {
        throw std::invalid_argument("--profile flat requires --frames delta,character and an odd prime --dim");
      }
      const MagnitudeProfile b = forward(gauss_state({p, 1}), frames);
      r.outputs["profile"] = to_json(b);

      // Generated family: the Gauss states psi_1 .. psi_{p-1}.
      std::vector<StateVector> family;
      double worst_residual = 0.0;
      for (std::int64_t a = 1; a < p; ++a) {
        family.push_back(gauss_state({p, a}));
        worst_residual = std::max(worst_residual, residual(family.back(), frames, b));
      }
      double max_distance = 0.0;
      const double min_distance = pairwise_min_distance(family, &max_distance);
      int certified = 0;
      for (std::size_t k = 1; k < family.size(); ++k) {
        certified += certify_witness(make_witness(family.front(), family[k], frames, b), frames, opt.solver.member_tol,
                                     opt.solver.threshold)
                         ? 1
                         : 0;
      }
      const bool family_ok = worst_residual <= opt.solver.member_tol &&
                             certified == static_cast<int>(family.size()) - 1;
      r.outputs["gauss_family"] = json{{"members", family.size()},
                                       {"max_residual", worst_residual},
                                       {"min_pairwise_distance", min_distance},
                                       {"max_pairwise_distance", max_distance},
                                       {"expected_distance", std::sqrt(1.0 - 1.0 / static_cast<double>(p))},
                                       {"certified_pairs", certified}};
      r.pass = family_ok;

      const ProfileSearchResult search = profile_search(frames, b, cfg, opt.trials);
      r.outputs["search"] = json{{"runs", search.runs},
                                 {"converged_runs", search.converged_runs},
                                 {"distinct_members", search.members.size()}};
      std::size_t extra = 0;
      for (const auto& m : search.members) {
        const bool fresh = std::all_of(family.begin(), family.end(), [&](const StateVector& f) {
          return projective_distance(f, m) >= opt.solver.threshold;
        });
        extra += fresh ? 1 : 0;
      }
      r.outputs["certified_members"] = family_ok ? family.size() + extra : extra;
      witnesses = search.witnesses;
    } else {
      throw std::invalid_argument("--profile must be planted or flat");
    }

    json list = json::array();
    int recertified = 0;
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
      const bool ok = certify_witness(witnesses[k], frames, cfg.tol, cfg.distinctness_threshold);
      recertified += ok ? 1 : 0;
      json w = to_json(witnesses[k]);
      w["certified"] = ok;
      list.push_back(std::move(w));
      write_csv(common, "witness_" + std::to_string(k) + ".csv",
                [&](std::ostream& os) { write_witness_csv(os, witnesses[k]); });
    }
    r.outputs["witness_count"] = witnesses.size();
    r.outputs["witnesses"] = list;
    r.pass = r.pass && recertified == static_cast<int>(witnesses.size());
    return r;
  });
}

ExperimentReport cmd_conjecture(const ConjectureOptions& opt, const CommonOptions& common) {
  SolverConfig cfg;
  cfg.max_iters = opt.max_iters;
  cfg.restarts = opt.restarts;
  cfg.tol = opt.tol;
  cfg.seed = common.seed;
  cfg.distinctness_threshold = opt.threshold;
  cfg.threads = common.threads;
  cfg.validate();

  Sampler sampler;
  if (opt.psi == "chirped-gaussian") {
    sampler = [](double t) { return std::exp(-0.5 * t * t) * std::polar(1.0, t - t * t); };
  } else if (opt.psi == "gaussian") {
    sampler = [](double t) { return cplx(std::exp(-0.5 * t * t), 0.0); };
  } else if (opt.psi == "shifted") {
    sampler = [](double t) { return std::exp(-0.5 * (t - 1.0) * (t - 1.0)) * std::polar(1.0, t - t * t); };
  } else {
    throw std::invalid_argument("--psi must be chirped-gaussian, gaussian or shifted");
  }

  return timed([&] {
    ExperimentReport r;
    r.experiment = "conjecture";
    r.seed = common.seed;
    r.params = json{{"psi", opt.psi},   {"points", opt.points},       {"extent", opt.extent},
                    {"runs", opt.runs}, {"max_iters", opt.max_iters}, {"restarts", opt.restarts},
                    {"tol", opt.tol},   {"threshold", opt.threshold}, {"refine", opt.refine}};
    GridFunction psi = GridFunction::sample(1, opt.extent, opt.points,
                                            [&](const Eigen::VectorXd& x) { return sampler(x(0)); });
    const ProbeReport rep =
        conjecture_probe(psi, cfg, opt.runs, opt.refine ? std::optional<Sampler>(sampler) : std::nullopt);
    r.outputs = to_json(rep);
    // Only psi and psi1 observed among converged runs.
    r.pass = rep.other == 0;
    write_csv(common, "psi.csv", [&](std::ostream& os) { write_grid_csv(os, psi); });
    return r;
  });
}

}  // namespace pauli::cli
