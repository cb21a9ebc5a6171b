// measurement.cpp

#include "pauli/measurement.hpp"

#include <bit>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace pauli {

FrameSet::FrameSet(std::vector<BasisFrame> frames) : frames_(std::move(frames)) {
  if (frames_.empty()) throw std::invalid_argument("FrameSet: at least one frame required");
  std::set<std::string> labels;
  const Index n = frames_.front().dim();
  for (const auto& f : frames_) {
    if (f.dim() != n) throw std::invalid_argument("FrameSet: frames have different dimensions");
    if (!labels.insert(f.label()).second) {
      throw std::invalid_argument("FrameSet: duplicate frame label '" + f.label() + "'");
    }
  }
}

void MagnitudeProfile::validate() const {
  if (values.size() == 0) throw std::invalid_argument("MagnitudeProfile: empty");
  if (!values.allFinite() || (values.array() < 0.0).any()) {
    throw std::invalid_argument("MagnitudeProfile: entries must be finite and non-negative");
  }
  if (normalized) {
    for (Index nu = 0; nu < values.rows(); ++nu) {
      if (std::abs(values.row(nu).squaredNorm() - 1.0) > 1e-10) {
        throw std::invalid_argument("MagnitudeProfile: row " + std::to_string(nu) +
                                    " is not normalized");
      }
    }
  }
}

MagnitudeProfile forward(const StateVector& x, const FrameSet& fs) {
  if (x.size() != fs.dim()) throw std::invalid_argument("forward: dimension mismatch");
  MagnitudeProfile b;
  b.values.resize(fs.size(), fs.dim());
  for (Index nu = 0; nu < fs.size(); ++nu) {
    b.values.row(nu) = fs[nu].analyze(x).cwiseAbs().transpose();
  }
  return b;
}

RealVector residual_by_frame(const StateVector& x, const FrameSet& fs, const MagnitudeProfile& b) {
  if (x.size() != fs.dim() || b.frames() != fs.size() || b.dim() != fs.dim()) {
    throw std::invalid_argument("residual: shape mismatch");
  }
  RealVector out(fs.size());
  for (Index nu = 0; nu < fs.size(); ++nu) {
    out(nu) = (fs[nu].analyze(x).cwiseAbs() - b.values.row(nu).transpose()).squaredNorm();
  }
  return out;
}

double residual(const StateVector& x, const FrameSet& fs, const MagnitudeProfile& b) {
  return std::sqrt(residual_by_frame(x, fs, b).sum());
}

bool is_member(const StateVector& x, const FrameSet& fs, const MagnitudeProfile& b, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_member: tol must be positive");
  return residual(x, fs, b) <= tol;
}

unsigned binary_ones(std::uint64_t k) { return static_cast<unsigned>(std::popcount(k)); }

ObstructionRow embedding_obstruction(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("embedding_obstruction: n must be >= 2");
  ObstructionRow row;
  row.n = n;
  row.lhs = 3 * n - 1;
  row.rhs = 4 * (n - 1) - 2 * static_cast<std::int64_t>(binary_ones(static_cast<std::uint64_t>(n - 1)));
  row.inequality_holds = row.lhs > row.rhs;
  return row;
}

void write_profile_csv(std::ostream& os, const MagnitudeProfile& b) {
  const auto old = os.precision(17);
  for (Index nu = 0; nu < b.frames(); ++nu) {
    for (Index i = 0; i < b.dim(); ++i) {
      if (i) os << ',';
      os << b.values(nu, i);
    }
    os << '\n';
  }
  os.precision(old);
}

MagnitudeProfile read_profile_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("read_profile_csv: ragged rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("read_profile_csv: no data");
  MagnitudeProfile b;
  b.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      b.values(static_cast<Index>(r), static_cast<Index>(c)) = rows[r][c];
  b.validate();
  return b;
}

}  // namespace pauli
