// constructions.cpp

#include "pauli/constructions.hpp"

namespace pauli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_grid(const GridParams& grid) {
  if (!(grid.extent > 0.0) || grid.points < 2 || grid.points % 2 != 0) {
    throw std::invalid_argument("grid: extent must be positive and points even");
  }
}

}  // namespace

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

StateVector gauss_state(const GaussStateSpec& spec) {
  if (!is_odd_prime(spec.p)) {
    throw std::invalid_argument("gauss_state: p = " + std::to_string(spec.p) + " is not an odd prime");
  }
  if (spec.a < 0 || spec.a >= spec.p) {
    throw std::invalid_argument("gauss_state: a must lie in [0, p-1]");
  }
  StateVector psi(spec.p);
  for (std::int64_t m = 0; m < spec.p; ++m) {
    const std::int64_t r = (spec.a * ((m * m) % spec.p)) % spec.p;
    psi(m) = std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(spec.p));
  }
  return psi;
}

FrameSet delta_character_frames(std::int64_t p) {
  return FrameSet({BasisFrame::standard(p, "delta"), BasisFrame::character(p, "character")});
}

Prop2Report verify_prop2(std::int64_t p, double tol) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("verify_prop2: p = " + std::to_string(p) + " is not an odd prime");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("verify_prop2: tol must be positive");
  Prop2Report r;
  r.p = p;
  const double flat = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::int64_t a = 1; a < p; ++a) {
    const StateVector psi = gauss_state({p, a});
    const StateVector c = cyclic_dft(psi, Direction::Forward);
    r.max_dev_delta_basis =
        std::max(r.max_dev_delta_basis, (psi.cwiseAbs().array() - 1.0).abs().maxCoeff());
    r.max_dev_char_basis =
        std::max(r.max_dev_char_basis, (c.cwiseAbs().array() - flat).abs().maxCoeff());
  }
  r.pass = r.max_dev_delta_basis <= tol && r.max_dev_char_basis <= tol;
  return r;
}

PairCertificate certify_pair(const StatePair& pair, double relative_floor) {
  const GridFunction& f = pair.first;
  const GridFunction& g = pair.second;
  if (!f.same_grid(g)) throw std::invalid_argument("certify_pair: grids differ");

  PairCertificate c;
  c.position_bitwise_equal = true;
  for (Index i = 0; i < f.size(); ++i) {
    const double a = std::abs(f[i]);
    const double b = std::abs(g[i]);
    if (a != b) c.position_bitwise_equal = false;
    c.max_position_deviation = std::max(c.max_position_deviation, std::abs(a - b));
  }

  const RealVector fm = grid_fourier(f).moduli();
  const RealVector gm = grid_fourier(g).moduli();
  c.max_momentum_deviation = (fm - gm).cwiseAbs().maxCoeff();
  c.momentum_floor = relative_floor;
  const double cutoff = relative_floor * fm.maxCoeff();
  for (Index i = 0; i < fm.size(); ++i) {
    if (fm(i) > cutoff) {
      c.max_momentum_relative_deviation =
          std::max(c.max_momentum_relative_deviation, std::abs(fm(i) - gm(i)) / fm(i));
    }
  }
  c.projective_distance = projective_distance(f.values(), g.values());
  return c;
}

ChirpSample chirp(const ChirpSpec& spec, const GridParams& grid) {
  if (spec.alpha == 0.0 || !std::isfinite(spec.alpha)) {
    throw std::invalid_argument("chirp: alpha must be nonzero");
  }
  require_grid(grid);
  const double alpha = spec.alpha;
  ChirpSample out{GridFunction::sample(1, grid.extent, grid.points,
                                       [alpha](const Eigen::VectorXd& x) {
                                         return std::polar(1.0, alpha * x(0) * x(0));
                                       }),
                  1.0 / std::sqrt(2.0 * std::abs(spec.alpha))};
  return out;
}

ChirpFlatness chirp_flatness(const ChirpSpec& spec, const GridParams& grid) {
  const ChirpSample s = chirp(spec, grid);
  const GridFunction ft = grid_fourier(s.samples);
  ChirpFlatness r;
  r.closed_form_magnitude = s.closed_form_magnitude;
  // The stationary point of p is x* = -p / (2 alpha).
  r.window = std::abs(spec.alpha) * grid.extent;
  r.min_magnitude = INFINITY;
  for (Index j = 0; j < ft.size(); ++j) {
    if (std::abs(ft.coordinate(j)) > r.window) continue;
    const double m = std::abs(ft[j]);
    ++r.window_samples;
    r.min_magnitude = std::min(r.min_magnitude, m);
    r.max_magnitude = std::max(r.max_magnitude, m);
    r.max_relative_deviation =
        std::max(r.max_relative_deviation, std::abs(m - r.closed_form_magnitude) / r.closed_form_magnitude);
  }
  return r;
}

GridFunction reflect_conjugate(const GridFunction& g) {
  if (g.dim() != 1) throw std::invalid_argument("reflect_conjugate: 1D grid required");
  GridFunction out = g;
  for (Index i = 0; i < g.size(); ++i) {
    const cplx mirror = g[g.reflect_index(i)];
    const double rho = std::abs(g[i]);
    const double phase = std::abs(mirror) < 1e-300 ? 0.0 : -std::arg(mirror);
    out.values()(i) = polar_exact_modulus(rho, phase);
  }
  return out;
}

Eigen::Matrix3d axis_rotation(int axis, double angle) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis_rotation: axis must be 0, 1 or 2");
  Eigen::Vector3d unit = Eigen::Vector3d::Zero();
  unit(axis) = 1.0;
  Eigen::Matrix3d r = Eigen::AngleAxisd(angle, unit).toRotationMatrix();
  // Snap quarter-turn entries to exact 0 and +-1.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(r(i, j)) < 1e-15) r(i, j) = 0.0;
  return r;
}

StatePair kontsevich_pair(const KontsevichSpec& spec, const GridParams& grid) {
  if (!(spec.alpha1 > 0.0)) throw std::invalid_argument("kontsevich_pair: alpha1 must be positive");
  if (spec.alpha2 == 0.0) throw std::invalid_argument("kontsevich_pair: alpha2 must be nonzero");
  const double dev = (spec.rotation.transpose() * spec.rotation - Eigen::Matrix3d::Identity())
                         .cwiseAbs()
                         .maxCoeff();
  if (!(dev <= 1e-12)) throw std::invalid_argument("kontsevich_pair: rotation is not orthogonal");
  require_grid(grid);

  const auto psi0 = [&spec](const Eigen::Vector3d& x, const Eigen::Vector3d& arg) {
    const double modulus = spec.amplitude * std::exp(-spec.alpha1 * x.squaredNorm());
    const double q = arg(0) * arg(0) + arg(1) * arg(1) - arg(2) * arg(2);
    return polar_exact_modulus(modulus, -spec.alpha2 * q);
  };
  const Eigen::Matrix3d sigma = spec.rotation;
  StatePair pair{
      GridFunction::sample(3, grid.extent, grid.points,
                           [&](const Eigen::VectorXd& x) {
                             const Eigen::Vector3d v = x;
                             return psi0(v, v);
                           }),
      GridFunction::sample(3, grid.extent, grid.points, [&](const Eigen::VectorXd& x) {
        const Eigen::Vector3d v = x;
        return psi0(v, sigma * v);
      })};
  return pair;
}

StatePair spherical_conjugate_pair(const RadialProfile& profile, const GridParams& grid) {
  if (!profile) throw std::invalid_argument("spherical_conjugate_pair: empty profile");
  require_grid(grid);
  GridFunction psi = GridFunction::sample(
      3, grid.extent, grid.points, [&](const Eigen::VectorXd& x) { return profile(x.norm()); });
  const double peak = psi.moduli().maxCoeff();
  if (!(peak > 0.0)) throw std::invalid_argument("spherical_conjugate_pair: profile vanishes on the grid");
  if (std::abs(profile(grid.extent)) > 1e-6 * peak) {
    throw std::invalid_argument("spherical_conjugate_pair: profile does not decay inside the box");
  }
  GridFunction conj = psi;
  conj.values() = psi.values().conjugate();
  return StatePair{std::move(psi), std::move(conj)};
}

}  // namespace pauli
