// constructions.hpp
// Explicit families of distinct states that share magnitude data, each with
// a certifier that recomputes the claimed coincidences numerically.

#pragma once

#include "pauli/measurement.hpp"
#include "pauli/statespace.hpp"

#include <functional>

namespace pauli {

bool is_odd_prime(std::int64_t p);

// --- Gauss states on Z/pZ --------------------------------------------------

struct GaussStateSpec {
  std::int64_t p = 3;
  std::int64_t a = 1;
};

/// psi_a(m) = exp(2 pi i a m^2 / p), phase index reduced mod p.
StateVector gauss_state(const GaussStateSpec& spec);

/// {delta, character} frames on Z/pZ.
FrameSet delta_character_frames(std::int64_t p);

struct Prop2Report {
  std::int64_t p = 0;
  double max_dev_delta_basis = 0.0;  // max | |b_aj| - 1 |
  double max_dev_char_basis = 0.0;   // max | |c_aj| - 1/sqrt(p) |
  bool pass = false;
};

/// Flatness of every Gauss state psi_a, 1 <= a <= p-1, in both the delta and
/// the character basis.
Prop2Report verify_prop2(std::int64_t p, double tol);

// --- Grid constructions ----------------------------------------------------

struct GridParams {
  double extent = 12.0;
  Index points = 1024;
};

inline constexpr GridParams kDefaultGrid1D{12.0, 1024};
inline constexpr GridParams kDefaultGrid3D{6.0, 32};

struct StatePair {
  GridFunction first;
  GridFunction second;
};

/// Magnitude comparison of two states on the same grid, in position and in
/// momentum (after grid_fourier).
struct PairCertificate {
  bool position_bitwise_equal = false;
  double max_position_deviation = 0.0;
  double max_momentum_deviation = 0.0;           // absolute
  double max_momentum_relative_deviation = 0.0;  // over samples above the floor
  double momentum_floor = 0.0;                   // relative to max |first_hat|
  double projective_distance = 0.0;
};

/// `relative_floor` selects the momentum samples entering the relative
/// deviation: |first_hat| > relative_floor * max |first_hat|.
PairCertificate certify_pair(const StatePair& pair, double relative_floor = 1e-6);

// Chirp f(x) = exp(i alpha x^2). Not square-integrable: the grid
// version is a truncated chirp, and its transform is only approximately flat.

struct ChirpSpec {
  double alpha = 1.0;
};

struct ChirpSample {
  GridFunction samples;
  double closed_form_magnitude = 0.0;  // |(2 alpha i)^{-1/2}| = (2|alpha|)^{-1/2}
};

ChirpSample chirp(const ChirpSpec& spec, const GridParams& grid);

struct ChirpFlatness {
  double closed_form_magnitude = 0.0;
  double window = 0.0;  // momenta |p| <= |alpha| L, stationary points in the central half
  Index window_samples = 0;
  double min_magnitude = 0.0;
  double max_magnitude = 0.0;
  double max_relative_deviation = 0.0;
};

ChirpFlatness chirp_flatness(const ChirpSpec& spec, const GridParams& grid);

/// psi_1(x) = |g(x)| exp(-i arg g(-x)) on a centered 1D grid. The modulus is
/// copied exactly. Samples with |g(-x)| < 1e-300 get phase 0.
GridFunction reflect_conjugate(const GridFunction& g);

// Kontsevich family psi_sigma(x) = psi_0(sigma x) with
// psi_0(x) = a exp(-alpha1 |x|^2 - i alpha2 (x1^2 + x2^2 - x3^2)).

struct KontsevichSpec {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  double amplitude = 1.0;
};

/// Rotation by `angle` about coordinate axis `axis` (0, 1 or 2).
Eigen::Matrix3d axis_rotation(int axis, double angle);

/// (psi_0, psi_sigma), both sampled from the closed form. The modulus
/// a exp(-alpha1 |x|^2) is rotation invariant and is evaluated at the
/// sample point for both members, so position moduli agree exactly.
StatePair kontsevich_pair(const KontsevichSpec& spec, const GridParams& grid);

using RadialProfile = std::function<cplx(double)>;

/// (psi, conj psi) with psi(x) = profile(|x|) on a centered 3D grid. The
/// profile must decay: boundary samples are required to be below 1e-6 of the
/// peak modulus.
StatePair spherical_conjugate_pair(const RadialProfile& profile, const GridParams& grid);

}  // namespace pauli
