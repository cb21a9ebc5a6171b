// report.cpp

#include "pauli/report.hpp"

#include <fstream>
#include <ostream>

namespace pauli {

json ExperimentReport::to_json() const {
  json j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["outputs"] = outputs;
  j["pass"] = informational ? json(nullptr) : json(pass);
  j["informational"] = informational;
  j["runtime_ms"] = runtime_ms;
  j["seed"] = seed;
  j["version"] = version;
  return j;
}

json to_json(const StateVector& x) {
  json a = json::array();
  for (Index i = 0; i < x.size(); ++i) a.push_back({x(i).real(), x(i).imag()});
  return a;
}

StateVector state_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("state_from_json: array expected");
  StateVector x(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    x(static_cast<Index>(i)) = cplx(j[i].at(0).get<double>(), j[i].at(1).get<double>());
  }
  return x;
}

json to_json(const MagnitudeProfile& b) {
  json rows = json::array();
  for (Index nu = 0; nu < b.frames(); ++nu) {
    json row = json::array();
    for (Index i = 0; i < b.dim(); ++i) row.push_back(b.values(nu, i));
    rows.push_back(std::move(row));
  }
  return json{{"frames", b.frames()}, {"dim", b.dim()}, {"normalized", b.normalized}, {"values", rows}};
}

json to_json(const GridFunction& g) {
  return json{{"dim", g.dim()},
              {"extent", g.extent()},
              {"points", g.points()},
              {"values", to_json(g.values())}};
}

GridFunction grid_from_json(const json& j) {
  return GridFunction(j.at("dim").get<int>(), j.at("extent").get<double>(), j.at("points").get<Index>(),
                      state_from_json(j.at("values")));
}

json to_json(const ObstructionRow& row) {
  return json{{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"holds", row.inequality_holds}};
}

json to_json(const Prop2Report& r) {
  return json{{"p", r.p},
              {"max_dev_delta_basis", r.max_dev_delta_basis},
              {"max_dev_char_basis", r.max_dev_char_basis},
              {"pass", r.pass}};
}

json to_json(const PairCertificate& c) {
  return json{{"position_bitwise_equal", c.position_bitwise_equal},
              {"max_position_deviation", c.max_position_deviation},
              {"max_momentum_deviation", c.max_momentum_deviation},
              {"max_momentum_relative_deviation", c.max_momentum_relative_deviation},
              {"momentum_floor", c.momentum_floor},
              {"projective_distance", c.projective_distance}};
}

json to_json(const ChirpFlatness& f) {
  return json{{"closed_form_magnitude", f.closed_form_magnitude},
              {"window", f.window},
              {"window_samples", f.window_samples},
              {"min_magnitude", f.min_magnitude},
              {"max_magnitude", f.max_magnitude},
              {"max_relative_deviation", f.max_relative_deviation}};
}

json to_json(const OrbitSet& orbits) {
  json j;
  j["mu"] = std::vector<double>(orbits.mu.data(), orbits.mu.data() + orbits.mu.size());
  j["lambda"] = std::vector<double>(orbits.lambda.data(), orbits.lambda.data() + orbits.lambda.size());
  json reps = json::array();
  for (const auto& r : orbits.representatives) {
    std::vector<int> signs(r.signs.data(), r.signs.data() + r.signs.size());
    std::vector<double> diag(static_cast<std::size_t>(r.A2.rows()));
    for (Index k = 0; k < r.A2.rows(); ++k) diag[static_cast<std::size_t>(k)] = r.A2(k, k);
    reps.push_back(json{{"signs", signs}, {"diagonal", diag}, {"orbit_dimension", r.orbit_dimension}});
  }
  j["sign_patterns"] = reps;
  json blocks = json::array();
  for (const auto& b : orbits.blocks) {
    blocks.push_back(json{{"indices", b.indices},
                          {"mu", b.mu},
                          {"lambda", b.lambda},
                          {"group_dimension", b.group_dimension}});
  }
  j["commutant_blocks"] = blocks;
  return j;
}

json to_json(const GaussianVerification& v) {
  return json{{"matrix_residual", v.matrix_residual},
              {"square_residual", v.square_residual},
              {"relation_residual", v.relation_residual},
              {"density_ratio", v.density_ratio},
              {"amplitude_ratio", v.amplitude_ratio},
              {"ratio_deviation", v.ratio_deviation},
              {"pass", v.pass}};
}

json to_json(const ReconstructResult& r) {
  json j{{"residual", r.residual},
         {"iterations", r.iterations},
         {"converged", r.converged},
         {"restart", r.restart},
         {"state", to_json(r.state)}};
  if (!r.trace.empty()) j["trace"] = r.trace;
  return j;
}

json to_json(const AmbiguityWitness& w) {
  return json{{"x", to_json(w.x)},
              {"y", to_json(w.y)},
              {"profile", to_json(w.profile)},
              {"residual_x", w.residual_x},
              {"residual_y", w.residual_y},
              {"distance", w.distance}};
}

json to_json(const ProbeReport& r) {
  json runs = json::array();
  for (const auto& run : r.runs) {
    runs.push_back(json{{"class", to_string(run.cls)},
                        {"residual", run.residual},
                        {"iterations", run.iterations},
                        {"distance_psi", run.distance_psi},
                        {"distance_psi1", run.distance_reflected},
                        {"flagged", run.flagged},
                        {"confirmed", run.confirmed}});
  }
  return json{{"points", r.points},
              {"extent", r.extent},
              {"counts",
               {{"psi", r.psi}, {"psi1", r.reflected_conjugate}, {"other", r.other}, {"unconverged", r.unconverged}}},
              {"flagged", r.flagged},
              {"confirmed", r.confirmed},
              {"refinement_available", r.refinement_available},
              {"psi1_residual", r.reflected_residual},
              {"runs", runs}};
}

void write_grid_csv(std::ostream& os, const GridFunction& g) {
  const auto old = os.precision(17);
  for (Index i = 0; i < g.size(); ++i) {
    const Eigen::VectorXd x = g.position(i);
    for (Index a = 0; a < x.size(); ++a) os << x(a) << ',';
    os << g[i].real() << ',' << g[i].imag() << '\n';
  }
  os.precision(old);
}

void write_witness_csv(std::ostream& os, const AmbiguityWitness& w) {
  const auto old = os.precision(17);
  for (Index i = 0; i < w.x.size(); ++i) {
    os << i << ',' << w.x(i).real() << ',' << w.x(i).imag() << ',' << w.y(i).real() << ',' << w.y(i).imag()
       << '\n';
  }
  os.precision(old);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
}

}  // namespace pauli
