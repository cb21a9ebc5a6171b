// gaussian_samples.hpp
// Random Gaussian parameters shared by the Gaussian tests and the acceptance run.

#pragma once

#include "pauli/gaussian.hpp"

namespace samples {

using namespace pauli;

inline RealMatrix random_spd(Index l, Rng& rng) {
  RealMatrix m(l, l);
  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < l; ++j) m(i, j) = rng.normal();
  return m * m.transpose() + 0.5 * RealMatrix::Identity(l, l);
}

inline RealMatrix random_symmetric(Index l, Rng& rng) {
  RealMatrix m(l, l);
  for (Index i = 0; i < l; ++i)
    for (Index j = 0; j < l; ++j) m(i, j) = rng.normal();
  return 0.5 * (m + m.transpose());
}

/// Standard normal entries, redrawn until |det| >= 0.2.
inline RealMatrix random_invertible(Index l, Rng& rng) {
  RealMatrix c;
  do {
    c.resize(l, l);
    for (Index i = 0; i < l; ++i)
      for (Index j = 0; j < l; ++j) c(i, j) = rng.normal();
  } while (std::abs(c.determinant()) < 0.2);
  return c;
}

/// A1 in [0.5, 2], A2 in [-2, 2], |a| in [0.5, 1.5].
inline GaussianState random_state_1d(Rng& rng) {
  RealMatrix a1(1, 1), a2(1, 1);
  a1(0, 0) = rng.uniform(0.5, 2.0);
  a2(0, 0) = rng.uniform(-2.0, 2.0);
  return {std::polar(rng.uniform(0.5, 1.5), rng.uniform(-3.0, 3.0)), a1, a2};
}

/// Max |grid_fourier(sample(g)) - gaussian_fourier(g)| over the grid.
inline double grid_error(const GaussianState& g, double L, Index N) {
  const GridFunction h = grid_fourier(sample(g, L, N));
  const GaussianState gh = gaussian_fourier(g);
  double err = 0.0;
  for (Index i = 0; i < h.size(); ++i) err = std::max(err, std::abs(h[i] - gh(h.position(i))));
  return err;
}

}  // namespace samples
