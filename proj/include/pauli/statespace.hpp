// statespace.hpp
// State vectors, orthonormal frames, projective geometry and the Fourier
// transforms (cyclic and centered-grid) used by the rest of the library.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace pauli {

using cplx = std::complex<double>;
using Index = Eigen::Index;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

enum class Direction { Forward, Inverse };

// ---------------------------------------------------------------------------
// Projective geometry. Templated on the Eigen expression so that blocks,
// maps and lazily evaluated products can be passed without a copy.
// ---------------------------------------------------------------------------

/// Hermitian inner product <x, y> = sum conj(x_i) y_i.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar inner(const Eigen::MatrixBase<DerivedX>& x,
                                const Eigen::MatrixBase<DerivedY>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  return x.dot(y);  // Eigen conjugates the left operand
}

/// sqrt(1 - |<x,y>|^2 / (|x|^2 |y|^2)), evaluated as the norm of the part of
/// y/|y| orthogonal to x/|x| so that proportional inputs give ~1e-16, not ~1e-8.
template <typename DerivedX, typename DerivedY>
typename Eigen::NumTraits<typename DerivedX::Scalar>::Real projective_distance(
    const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  using Real = typename Eigen::NumTraits<typename DerivedX::Scalar>::Real;
  if (x.size() != y.size()) {
    throw std::invalid_argument("projective_distance: dimension mismatch");
  }
  const Real nx = x.norm();
  const Real ny = y.norm();
  if (!(nx > Real(0)) || !(ny > Real(0))) {
    throw std::invalid_argument("projective_distance: zero vector");
  }
  const auto u = (x / nx).eval();
  const auto v = (y / ny).eval();
  const Real orth = (v - u * u.dot(v)).norm();
  return std::clamp(orth, Real(0), Real(1));
}

inline constexpr double kPhasePivotThreshold = 1e-10;

/// Unit-norm representative of the ray through x whose first coefficient of
/// magnitude > 1e-10 is real and positive.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> canonical_phase(
    const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Real n = x.norm();
  if (!(n > Real(0))) {
    throw std::invalid_argument("canonical_phase: zero vector");
  }
  // Pivot threshold applies to the normalized vector so that a second pass
  // selects the same pivot.
  Index pivot = 0;
  while (pivot < x.size() && !(std::abs(x(pivot)) / n > Real(kPhasePivotThreshold))) ++pivot;
  if (pivot == x.size()) pivot = 0;

  const Scalar c = x(pivot);
  // Already canonical: unit norm to rounding and a real positive pivot.
  const Real slack = Real(8) * Real(x.size()) * Eigen::NumTraits<Real>::epsilon();
  if (c.imag() == Real(0) && c.real() > Real(0) && std::abs(n - Real(1)) <= slack) {
    return x;
  }
  const Scalar phase = std::conj(c) / std::abs(c);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = x * (phase / n);
  out(pivot) = Scalar(std::abs(out(pivot)), Real(0));
  return out;
}

/// r * exp(i theta), rounded so that std::abs of the result reproduces r
/// exactly. Used where paired states must share position moduli bit for bit.
cplx polar_exact_modulus(double r, double theta);

// ---------------------------------------------------------------------------
// Seeded randomness. Each (seed, stream) pair gives an independent,
// platform-stable stream: the seed is mixed with splitmix64 and drives a
// mt19937_64, whose output sequence is fixed by the standard.
// ---------------------------------------------------------------------------

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : engine_(derive_seed(seed, stream)) {}

  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // Box-Muller on the raw engine
  cplx complex_normal();                 // (N(0,1) + i N(0,1)) / sqrt(2)

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Complex standard normal vector, normalized to unit norm.
StateVector random_state(Index n, Rng& rng);

// ---------------------------------------------------------------------------
// Cyclic DFT on Z/pZ with the expansion convention f = sum_j c_j X_j,
// X_j(m) = exp(2 pi i j m / p):
//   Forward:  c_j  = (1/p) sum_m f(m) conj(X_j(m))
//   Inverse:  f(m) = sum_j c_j X_j(m)
// Phases are reduced mod p before evaluation.
// ---------------------------------------------------------------------------

StateVector cyclic_dft(const StateVector& f, Direction direction = Direction::Forward);

/// The character X_a as a vector of length p.
StateVector character(Index p, Index a);

// ---------------------------------------------------------------------------
// GridFunction: samples on a centered cubic grid of `points` (even) per axis,
// x_k = (k - N/2) * 2L/N, flattened row-major with the last axis fastest.
// ---------------------------------------------------------------------------

class GridFunction {
 public:
  GridFunction(int dim, double extent, Index points, StateVector values);

  static GridFunction zeros(int dim, double extent, Index points);

  /// Samples f at every grid point; f receives an Eigen::VectorXd of size dim.
  template <typename F>
  static GridFunction sample(int dim, double extent, Index points, F&& f);

  int dim() const { return dim_; }
  double extent() const { return extent_; }
  Index points() const { return points_; }
  Index size() const { return values_.size(); }
  double spacing() const { return 2.0 * extent_ / static_cast<double>(points_); }
  double coordinate(Index k) const { return static_cast<double>(k - points_ / 2) * spacing(); }
  /// Half-width of the reciprocal grid: spacing pi/L, same point count.
  double conjugate_extent() const {
    return static_cast<double>(points_) * std::numbers::pi / (2.0 * extent_);
  }
  /// Cell volume spacing^dim.
  double cell() const { return std::pow(spacing(), dim_); }

  const StateVector& values() const { return values_; }
  StateVector& values() { return values_; }
  cplx operator[](Index i) const { return values_(i); }

  /// Multi-index of flat index i (axis 0 slowest).
  Eigen::VectorXi unflatten(Index i) const;
  Index flatten(const Eigen::VectorXi& k) const;
  /// Physical coordinates of flat index i.
  Eigen::VectorXd position(Index i) const;
  /// Flat index of the grid point at -x (index k -> (N - k) mod N per axis).
  Index reflect_index(Index i) const;
  GridFunction reflected() const;

  /// Discrete L2 norm sqrt(sum |v|^2 * spacing^dim).
  double norm() const;
  RealVector moduli() const { return values_.cwiseAbs(); }

  /// Extents compare to 1e-12 relative: a forward/inverse round trip
  /// recomputes the extent through the reciprocal grid.
  bool same_grid(const GridFunction& other) const {
    return dim_ == other.dim_ && points_ == other.points_ &&
           std::abs(extent_ - other.extent_) <= 1e-12 * extent_;
  }

 private:
  int dim_;
  double extent_;
  Index points_;
  StateVector values_;
};

template <typename F>
GridFunction GridFunction::sample(int dim, double extent, Index points, F&& f) {
  GridFunction g = zeros(dim, extent, points);
  Eigen::VectorXd x(dim);
  for (Index i = 0; i < g.size(); ++i) {
    x = g.position(i);
    g.values_(i) = f(x);
  }
  return g;
}

/// psi_hat(p) = (2 pi)^{-dim/2} int psi(x) exp(+i p.x) dx on the centered
/// grid (Forward), or the synthesis with exp(-i p.x) (Inverse). The output
/// lives on the reciprocal grid (extent = g.conjugate_extent()). The discrete
/// map is unitary; applying Forward twice reflects the input through 0.
GridFunction grid_fourier(const GridFunction& g, Direction direction = Direction::Forward);

// ---------------------------------------------------------------------------
// BasisFrame: an orthonormal basis {e_i} of C^n. Coefficients are reported
// as a_i = scale * <e_i, x>; scale != 1 expresses expansions in orthogonal
// but non-normalized bases (the character basis has scale 1/sqrt(p)).
// ---------------------------------------------------------------------------

class BasisFrame {
 public:
  enum class Kind { Standard, Dense, CyclicCharacter, GridMomentum };

  static constexpr double kOrthonormalityTolerance = 1e-12;

  /// Columns must be orthonormal within 1e-12 per entry of U^H U - I.
  static BasisFrame dense(ComplexMatrix columns, std::string label, double scale = 1.0);
  static BasisFrame standard(Index n, std::string label = "delta");
  /// Characters X_j of Z/pZ, coefficients in the expansion convention
  /// x = sum_j a_j X_j (delegates to cyclic_dft).
  static BasisFrame character(Index p, std::string label = "character");
  /// Haar-random unitary frame.
  static BasisFrame random_unitary(Index n, std::uint64_t seed, std::string label);
  /// Momentum samples of a 1D centered grid: a = grid_fourier(x).
  static BasisFrame grid_momentum(double extent, Index points, std::string label = "momentum");

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }
  const std::string& label() const { return label_; }
  double scale() const { return scale_; }

  StateVector analyze(const StateVector& x) const;
  StateVector synthesize(const StateVector& coeffs) const;
  /// Orthonormal columns e_i, materialized.
  ComplexMatrix columns() const;

  /// Optional eigenvalues lambda_i of the observable diagonal in this frame.
  /// They play no role in any computation.
  std::optional<RealVector> eigenvalues;

 private:
  BasisFrame(Kind kind, Index dim, std::string label, double scale)
      : kind_(kind), dim_(dim), label_(std::move(label)), scale_(scale) {}

  Kind kind_;
  Index dim_;
  std::string label_;
  double scale_;
  ComplexMatrix dense_;
  double grid_extent_ = 0.0;
};

}  // namespace pauli
