// statespace.cpp

#include "pauli/statespace.hpp"

#include <unsupported/Eigen/FFT>

#include <vector>

namespace pauli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_even_positive(Index n) { return n >= 2 && n % 2 == 0; }

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// One 1D centered-grid transform along `axis` of a dim-dimensional array,
// in place. sign = +1 for exp(+i p x), -1 for exp(-i p x).
void transform_axis(StateVector& values, int dim, Index n, int axis, int sign, double scale) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);

  Index stride = 1;
  for (int a = axis + 1; a < dim; ++a) stride *= n;
  const Index block = stride * n;
  const Index total = values.size();
  // (-1)^{N/2} from the centering of both grids.
  const double global = (n / 2) % 2 == 0 ? 1.0 : -1.0;

  std::vector<cplx> line(static_cast<std::size_t>(n));
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (Index base = 0; base < total; base += block) {
    for (Index offset = 0; offset < stride; ++offset) {
      const Index start = base + offset;
      for (Index k = 0; k < n; ++k) {
        const cplx v = values(start + k * stride);
        line[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
      }
      if (sign > 0) {
        fft.inv(out, line);
      } else {
        fft.fwd(out, line);
      }
      for (Index j = 0; j < n; ++j) {
        const double s = (j % 2 == 0 ? global : -global) * scale;
        values(start + j * stride) = s * out[static_cast<std::size_t>(j)];
      }
    }
  }
}

}  // namespace

cplx polar_exact_modulus(double r, double theta) {
  const cplx z = std::polar(r, theta);
  if (std::abs(z) == r || !std::isfinite(r)) return z;
  // Walk outward over ulp neighbours of (re, im) in growing square shells.
  constexpr int kMaxShell = 16;
  const auto step = [](double v, int count) {
    const double toward = count > 0 ? INFINITY : -INFINITY;
    for (int c = 0; c < std::abs(count); ++c) v = std::nextafter(v, toward);
    return v;
  };
  for (int shell = 1; shell <= kMaxShell; ++shell) {
    for (int i = -shell; i <= shell; ++i) {
      for (int j = -shell; j <= shell; ++j) {
        if (std::max(std::abs(i), std::abs(j)) != shell) continue;
        const cplx w(step(z.real(), i), step(z.imag(), j));
        if (std::abs(w) == r) return w;
      }
    }
  }
  return z;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  return r * std::cos(kTwoPi * u2);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) * std::numbers::sqrt2 * 0.5;
}

StateVector random_state(Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_state: dimension must be >= 1");
  StateVector x(n);
  for (Index i = 0; i < n; ++i) x(i) = rng.complex_normal();
  return x / x.norm();
}

StateVector cyclic_dft(const StateVector& f, Direction direction) {
  const Index p = f.size();
  if (p < 2) throw std::invalid_argument("cyclic_dft: length must be >= 2");
  // roots[r] = exp(-2 pi i r / p)
  std::vector<cplx> roots(static_cast<std::size_t>(p));
  for (Index r = 0; r < p; ++r) {
    roots[static_cast<std::size_t>(r)] =
        std::polar(1.0, -kTwoPi * static_cast<double>(r) / static_cast<double>(p));
  }
  StateVector out(p);
  const bool forward = direction == Direction::Forward;
  for (Index j = 0; j < p; ++j) {
    cplx acc(0.0, 0.0);
    for (Index m = 0; m < p; ++m) {
      const cplx w = roots[static_cast<std::size_t>((j * m) % p)];
      acc += f(m) * (forward ? w : std::conj(w));
    }
    out(j) = forward ? acc / static_cast<double>(p) : acc;
  }
  return out;
}

StateVector character(Index p, Index a) {
  if (p < 2) throw std::invalid_argument("character: p must be >= 2");
  StateVector x(p);
  const Index ar = ((a % p) + p) % p;
  for (Index m = 0; m < p; ++m) {
    x(m) = std::polar(1.0, kTwoPi * static_cast<double>((ar * m) % p) / static_cast<double>(p));
  }
  return x;
}

// ---------------------------------------------------------------------------

GridFunction::GridFunction(int dim, double extent, Index points, StateVector values)
    : dim_(dim), extent_(extent), points_(points), values_(std::move(values)) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("GridFunction: dim must be 1, 2 or 3");
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw std::invalid_argument("GridFunction: extent must be positive and finite");
  }
  if (!is_even_positive(points)) throw std::invalid_argument("GridFunction: points must be even");
  Index expected = 1;
  for (int a = 0; a < dim; ++a) expected *= points;
  if (values_.size() != expected) {
    throw std::invalid_argument("GridFunction: expected " + std::to_string(expected) +
                                " samples, got " + std::to_string(values_.size()));
  }
  if (!values_.allFinite()) throw std::invalid_argument("GridFunction: non-finite sample");
}

GridFunction GridFunction::zeros(int dim, double extent, Index points) {
  Index total = 1;
  for (int a = 0; a < std::clamp(dim, 1, 3); ++a) total *= std::max<Index>(points, 0);
  return GridFunction(dim, extent, points, StateVector::Zero(total));
}

Eigen::VectorXi GridFunction::unflatten(Index i) const {
  Eigen::VectorXi k(dim_);
  for (int a = dim_ - 1; a >= 0; --a) {
    k(a) = static_cast<int>(i % points_);
    i /= points_;
  }
  return k;
}

Index GridFunction::flatten(const Eigen::VectorXi& k) const {
  Index i = 0;
  for (int a = 0; a < dim_; ++a) i = i * points_ + k(a);
  return i;
}

Eigen::VectorXd GridFunction::position(Index i) const {
  const Eigen::VectorXi k = unflatten(i);
  Eigen::VectorXd x(dim_);
  for (int a = 0; a < dim_; ++a) x(a) = coordinate(k(a));
  return x;
}

Index GridFunction::reflect_index(Index i) const {
  Eigen::VectorXi k = unflatten(i);
  for (int a = 0; a < dim_; ++a) k(a) = static_cast<int>((points_ - k(a)) % points_);
  return flatten(k);
}

GridFunction GridFunction::reflected() const {
  GridFunction out = *this;
  for (Index i = 0; i < size(); ++i) out.values_(i) = values_(reflect_index(i));
  return out;
}

double GridFunction::norm() const { return values_.norm() * std::sqrt(cell()); }

GridFunction grid_fourier(const GridFunction& g, Direction direction) {
  const int sign = direction == Direction::Forward ? +1 : -1;
  const double scale = g.spacing() / std::sqrt(kTwoPi);
  StateVector values = g.values();
  for (int axis = 0; axis < g.dim(); ++axis) {
    transform_axis(values, g.dim(), g.points(), axis, sign, scale);
  }
  return GridFunction(g.dim(), g.conjugate_extent(), g.points(), std::move(values));
}

// ---------------------------------------------------------------------------

BasisFrame BasisFrame::dense(ComplexMatrix columns, std::string label, double scale) {
  if (columns.rows() != columns.cols() || columns.rows() < 1) {
    throw std::invalid_argument("BasisFrame '" + label + "': columns must be a non-empty square matrix");
  }
  if (!(scale > 0.0)) throw std::invalid_argument("BasisFrame '" + label + "': scale must be positive");
  const Index n = columns.rows();
  const double dev =
      (columns.adjoint() * columns - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(dev <= kOrthonormalityTolerance)) {
    throw std::invalid_argument("BasisFrame '" + label + "': columns not orthonormal (max |U^H U - I| = " +
                                std::to_string(dev) + ")");
  }
  BasisFrame f(Kind::Dense, n, std::move(label), scale);
  f.dense_ = std::move(columns);
  return f;
}

BasisFrame BasisFrame::standard(Index n, std::string label) {
  if (n < 1) throw std::invalid_argument("BasisFrame::standard: n must be >= 1");
  return BasisFrame(Kind::Standard, n, std::move(label), 1.0);
}

BasisFrame BasisFrame::character(Index p, std::string label) {
  if (p < 2) throw std::invalid_argument("BasisFrame::character: p must be >= 2");
  return BasisFrame(Kind::CyclicCharacter, p, std::move(label), 1.0 / std::sqrt(static_cast<double>(p)));
}

BasisFrame BasisFrame::random_unitary(Index n, std::uint64_t seed, std::string label) {
  if (n < 1) throw std::invalid_argument("BasisFrame::random_unitary: n must be >= 1");
  Rng rng(seed, 0x6672616d65ULL);
  ComplexMatrix g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return dense(std::move(q), std::move(label));
}

BasisFrame BasisFrame::grid_momentum(double extent, Index points, std::string label) {
  if (!(extent > 0.0) || !is_even_positive(points)) {
    throw std::invalid_argument("BasisFrame::grid_momentum: invalid grid");
  }
  // |grid_fourier(x)|^2 = (dx/dp) |x|^2 with dx = 2L/N and dp = pi/L.
  const double ratio = 2.0 * extent * extent / (static_cast<double>(points) * std::numbers::pi);
  BasisFrame f(Kind::GridMomentum, points, std::move(label), std::sqrt(ratio));
  f.grid_extent_ = extent;
  return f;
}

StateVector BasisFrame::analyze(const StateVector& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("BasisFrame '" + label_ + "': dimension mismatch (" +
                                std::to_string(x.size()) + " vs " + std::to_string(dim_) + ")");
  }
  switch (kind_) {
    case Kind::Standard:
      return x;
    case Kind::Dense:
      return scale_ * (dense_.adjoint() * x);
    case Kind::CyclicCharacter:
      return cyclic_dft(x, Direction::Forward);
    case Kind::GridMomentum:
      return grid_fourier(GridFunction(1, grid_extent_, dim_, x), Direction::Forward).values();
  }
  throw std::logic_error("BasisFrame: unknown kind");
}

StateVector BasisFrame::synthesize(const StateVector& coeffs) const {
  if (coeffs.size() != dim_) {
    throw std::invalid_argument("BasisFrame '" + label_ + "': dimension mismatch");
  }
  switch (kind_) {
    case Kind::Standard:
      return coeffs;
    case Kind::Dense:
      return dense_ * (coeffs / scale_);
    case Kind::CyclicCharacter:
      return cyclic_dft(coeffs, Direction::Inverse);
    case Kind::GridMomentum: {
      const GridFunction p(1, GridFunction::zeros(1, grid_extent_, dim_).conjugate_extent(), dim_, coeffs);
      return grid_fourier(p, Direction::Inverse).values();
    }
  }
  throw std::logic_error("BasisFrame: unknown kind");
}

ComplexMatrix BasisFrame::columns() const {
  switch (kind_) {
    case Kind::Standard:
      return ComplexMatrix::Identity(dim_, dim_);
    case Kind::Dense:
      return dense_;
    case Kind::CyclicCharacter:
    case Kind::GridMomentum: {
      ComplexMatrix u(dim_, dim_);
      StateVector e = StateVector::Zero(dim_);
      for (Index j = 0; j < dim_; ++j) {
        e.setZero();
        e(j) = scale_;
        u.col(j) = synthesize(e);
      }
      return u;
    }
  }
  throw std::logic_error("BasisFrame: unknown kind");
}

}  // namespace pauli
