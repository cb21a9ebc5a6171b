// report.hpp
// JSON experiment reports and CSV side files.

#pragma once

#include "pauli/constructions.hpp"
#include "pauli/gaussian.hpp"
#include "pauli/measurement.hpp"
#include "pauli/solvers.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace pauli {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = PAULI_VERSION;

struct ExperimentReport {
  std::string experiment;
  json params = json::object();
  json outputs = json::object();
  bool pass = false;
  bool informational = false;
  std::int64_t runtime_ms = 0;
  std::uint64_t seed = 0;
  std::string version = kVersion;

  json to_json() const;
};

json to_json(const StateVector& x);        // [[re, im], ...]
StateVector state_from_json(const json& j);
json to_json(const MagnitudeProfile& b);
json to_json(const GridFunction& g);        // metadata plus [[re, im], ...]
GridFunction grid_from_json(const json& j);
json to_json(const ObstructionRow& row);
json to_json(const Prop2Report& r);
json to_json(const PairCertificate& c);
json to_json(const ChirpFlatness& f);
json to_json(const OrbitSet& orbits);
json to_json(const GaussianVerification& v);
json to_json(const ReconstructResult& r);
json to_json(const AmbiguityWitness& w);
json to_json(const ProbeReport& r);

/// x, Re, Im (1D) or x1, ..., Re, Im per line.
void write_grid_csv(std::ostream& os, const GridFunction& g);
/// i, x_re, x_im, y_re, y_im per line.
void write_witness_csv(std::ostream& os, const AmbiguityWitness& w);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pauli
