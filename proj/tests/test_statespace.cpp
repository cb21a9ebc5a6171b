#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pauli/statespace.hpp"

using namespace pauli;

namespace {

StateVector unit(Index n, Index i) {
  StateVector e = StateVector::Zero(n);
  e(i) = 1.0;
  return e;
}

double max_abs(const StateVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("inner product on unit vectors and Gauss states") {
  CHECK(inner(unit(3, 0), unit(3, 0)) == cplx(1.0, 0.0));
  CHECK(inner(unit(3, 0), unit(3, 1)) == cplx(0.0, 0.0));
  const StateVector g1 = oracle::gauss(5, 1);
  const StateVector g2 = oracle::gauss(5, 2);
  CHECK(std::abs(inner(g1, g2)) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  // conjugate-linear in the first slot
  const cplx s(0.3, -1.2);
  CHECK(std::abs(inner(StateVector(s * g1), g2) - std::conj(s) * inner(g1, g2)) < 1e-12);
  CHECK_THROWS_AS(inner(unit(3, 0), unit(4, 0)), std::invalid_argument);
}

TEST_CASE("projective distance") {
  Rng rng(11);
  const StateVector x = random_state(6, rng);
  CHECK(projective_distance(x, StateVector(cplx(0.0, 3.0) * x)) < 1e-15);
  CHECK(projective_distance(unit(2, 0), unit(2, 1)) == 1.0);
  CHECK(projective_distance(oracle::gauss(5, 1), oracle::gauss(5, 2)) ==
        doctest::Approx(std::sqrt(1.0 - 1.0 / 5.0)).epsilon(1e-12));
  CHECK_THROWS_AS(projective_distance(StateVector::Zero(2), unit(2, 0)), std::invalid_argument);

  SUBCASE("symmetric, bounded and matches the naive formula") {
    for (int t = 0; t < 50; ++t) {
      const StateVector a = random_state(5, rng);
      const StateVector b = random_state(5, rng);
      const double d = projective_distance(a, b);
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
      CHECK(d == doctest::Approx(projective_distance(b, a)).epsilon(1e-12));
      CHECK(d == doctest::Approx(oracle::distance(a, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("canonical phase") {
  StateVector a(2);
  a << cplx(0.0, 0.0), cplx(0.0, 2.0);
  StateVector ea(2);
  ea << 0.0, 1.0;
  CHECK(max_abs(canonical_phase(a) - ea) < 1e-15);

  StateVector b(2);
  b << 1.0, 0.0;
  CHECK(max_abs(canonical_phase(b) - b) == 0.0);

  StateVector c(2);
  c << cplx(1.0, 1.0), cplx(1.0, -1.0);
  StateVector ec(2);
  ec << cplx(1.0 / std::sqrt(2.0), 0.0), cplx(0.0, -1.0 / std::sqrt(2.0));
  const StateVector cc = canonical_phase(c);
  CHECK(max_abs(cc - ec) < 1e-15);
  CHECK(cc.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cc(0).imag() == 0.0);

  SUBCASE("idempotent and ray-invariant") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
      const StateVector x = random_state(7, rng);
      const StateVector once = canonical_phase(x);
      const StateVector twice = canonical_phase(once);
      CHECK(max_abs(once - twice) == 0.0);
      const StateVector rotated = std::polar(2.5, rng.uniform(0.0, 6.0)) * x;
      CHECK(max_abs(canonical_phase(rotated) - once) < 1e-14);
    }
  }
}

TEST_CASE("polar with exact modulus") {
  Rng rng(3);
  for (int t = 0; t < 100000; ++t) {
    const double r = std::exp(rng.uniform(-30.0, 5.0));
    const double theta = rng.uniform(-10.0, 10.0);
    const cplx z = polar_exact_modulus(r, theta);
    REQUIRE(std::abs(z) == r);
    REQUIRE(std::abs(std::arg(z) - std::remainder(theta, 2.0 * std::numbers::pi)) < 1e-12);
  }
  CHECK(polar_exact_modulus(0.0, 1.0) == cplx(0.0, 0.0));
}

TEST_CASE("seeded randomness is reproducible") {
  Rng a(42, 7);
  Rng b(42, 7);
  Rng c(42, 8);
  bool differs = false;
  for (int t = 0; t < 100; ++t) {
    const double x = a.normal();
    CHECK(x == b.normal());
    differs = differs || x != c.normal();
  }
  CHECK(differs);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(0, 1));

  Rng r(9);
  const StateVector x = random_state(10, r);
  CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-15));

  SUBCASE("uniform range and normal moments") {
    Rng s(1);
    double mean = 0.0;
    double var = 0.0;
    const int n = 200000;
    for (int t = 0; t < n; ++t) {
      const double u = s.uniform(-2.0, 3.0);
      REQUIRE(u >= -2.0);
      REQUIRE(u < 3.0);
      const double z = s.normal();
      mean += z;
      var += z * z;
    }
    CHECK(std::abs(mean / n) < 0.01);
    CHECK(std::abs(var / n - 1.0) < 0.02);
  }
}

TEST_CASE("cyclic DFT against direct summation") {
  StateVector delta = unit(3, 0);
  StateVector third = StateVector::Constant(3, 1.0 / 3.0);
  CHECK(max_abs(cyclic_dft(delta) - third) < 1e-15);
  StateVector e1 = unit(3, 1);
  CHECK(max_abs(cyclic_dft(character(3, 1)) - e1) < 1e-15);

  const StateVector g = oracle::gauss(3, 1);
  CHECK(max_abs(cyclic_dft(g).cwiseAbs().cast<cplx>() - StateVector::Constant(3, 1.0 / std::sqrt(3.0))) < 1e-15);

  Rng rng(21);
  for (Index p : {2, 3, 5, 7, 12, 97}) {
    const StateVector f = random_state(p, rng);
    const StateVector c = cyclic_dft(f);
    CHECK(max_abs(c - oracle::dft_direct(f)) < 1e-13);
    CHECK(max_abs(cyclic_dft(c, Direction::Inverse) - f) < 1e-13);
  }
  for (Index a = 0; a < 7; ++a) {
    StateVector expect(7);
    for (Index m = 0; m < 7; ++m) expect(m) = oracle::root_of_unity(a * m, 7);
    CHECK(max_abs(character(7, a) - expect) < 1e-15);
  }
}

TEST_CASE("grid Fourier transform") {
  const double L = 12.0;
  const Index N = 1024;
  const double c = std::pow(std::numbers::pi, -0.25);
  const GridFunction psi =
      GridFunction::sample(1, L, N, [&](const Eigen::VectorXd& x) { return cplx(c * std::exp(-0.5 * x(0) * x(0))); });
  const GridFunction hat = grid_fourier(psi);
  CHECK(hat.extent() == doctest::Approx(N * std::numbers::pi / (2 * L)));

  SUBCASE("standard Gaussian is a fixed point") {
    double err = 0.0;
    for (Index j = 0; j < N; ++j) {
      const double p = hat.coordinate(j);
      err = std::max(err, std::abs(hat[j] - c * std::exp(-0.5 * p * p)));
    }
    CHECK(err < 1e-8);
  }

  SUBCASE("zero maps to zero") {
    CHECK(max_abs(grid_fourier(GridFunction::zeros(1, L, 64)).values()) == 0.0);
  }

  SUBCASE("agrees with the Riemann sum at every grid momentum") {
    const Index n = 64;
    const double l = 5.0;
    auto f = [](double x) { return std::exp(cplx(-0.3 * x * x, 0.7 * x - 0.2 * x * x)); };
    const GridFunction g = GridFunction::sample(1, l, n, [&](const Eigen::VectorXd& x) { return f(x(0)); });
    const GridFunction gh = grid_fourier(g);
    double err = 0.0;
    for (Index j = 0; j < n; ++j) err = std::max(err, std::abs(gh[j] - oracle::fourier_riemann(f, l, n, gh.coordinate(j))));
    CHECK(err < 1e-13);
  }

  SUBCASE("modulated Gaussian: exp(ix) moves the peak to p = -1 under the exp(+ipx) kernel") {
    auto f = [&](double x) { return c * std::exp(-0.5 * x * x) * std::polar(1.0, x); };
    const GridFunction g = GridFunction::sample(1, L, N, [&](const Eigen::VectorXd& x) { return f(x(0)); });
    const GridFunction gh = grid_fourier(g);
    Index peak = 0;
    gh.moduli().maxCoeff(&peak);
    CHECK(std::abs(gh.coordinate(peak) + 1.0) <= 0.5 * std::numbers::pi / L);
    // Dense quadrature on [-L, L] at 32 momenta.
    for (int k = 0; k < 32; ++k) {
      const Index j = N / 2 - 16 + k;
      const double p = gh.coordinate(j);
      const cplx q = oracle::simpson([&](double x) { return f(x) * std::polar(1.0, p * x); }, -L, L, 20000) /
                     std::sqrt(2.0 * std::numbers::pi);
      CHECK(std::abs(gh[j] - q) < 1e-9);
    }
    // |psi_hat(p)| = c exp(-(p + 1)^2 / 2)
    for (Index j = 0; j < N; ++j) {
      REQUIRE(std::abs(std::abs(gh[j]) - c * std::exp(-0.5 * std::pow(gh.coordinate(j) + 1.0, 2))) < 1e-8);
    }
  }

  SUBCASE("unitary; F^2 reflects; F^4 is the identity; inverse undoes forward") {
    Rng rng(8);
    for (int dim : {1, 2, 3}) {
      const Index n = dim == 1 ? 128 : dim == 2 ? 16 : 8;
      GridFunction g = GridFunction::zeros(dim, 3.0, n);
      for (Index i = 0; i < g.size(); ++i) g.values()(i) = rng.complex_normal();
      const GridFunction f1 = grid_fourier(g);
      CHECK(f1.norm() == doctest::Approx(g.norm()).epsilon(1e-12));
      const GridFunction f2 = grid_fourier(f1);
      CHECK(f2.same_grid(g));
      CHECK(max_abs(f2.values() - g.reflected().values()) < 1e-12);
      const GridFunction f4 = grid_fourier(grid_fourier(f2));
      CHECK(max_abs(f4.values() - g.values()) < 1e-12);
      const GridFunction back = grid_fourier(f1, Direction::Inverse);
      CHECK(back.same_grid(g));
      CHECK(max_abs(back.values() - g.values()) < 1e-12);
    }
  }

  SUBCASE("2D transform is the product of 1D Riemann sums for separable input") {
    const Index n = 16;
    const double l = 4.0;
    auto fx = [](double x) { return std::exp(cplx(-0.4 * x * x, 0.3 * x)); };
    auto fy = [](double y) { return std::exp(cplx(-0.6 * y * y, -0.5 * y * y)); };
    const GridFunction g =
        GridFunction::sample(2, l, n, [&](const Eigen::VectorXd& x) { return fx(x(0)) * fy(x(1)); });
    const GridFunction gh = grid_fourier(g);
    double err = 0.0;
    for (Index i = 0; i < gh.size(); ++i) {
      const Eigen::VectorXd p = gh.position(i);
      err = std::max(err, std::abs(gh[i] - oracle::fourier_riemann(fx, l, n, p(0)) * oracle::fourier_riemann(fy, l, n, p(1))));
    }
    CHECK(err < 1e-13);
  }
}

TEST_CASE("grid indexing") {
  const GridFunction g = GridFunction::zeros(3, 2.0, 4);
  CHECK(g.size() == 64);
  for (Index i = 0; i < g.size(); ++i) {
    CHECK(g.flatten(g.unflatten(i)) == i);
    const Index r = g.reflect_index(i);
    const Eigen::VectorXi k = g.unflatten(i);
    const Eigen::VectorXi kr = g.unflatten(r);
    for (int a = 0; a < 3; ++a) CHECK(kr(a) == (4 - k(a)) % 4);
  }
  CHECK(g.position(g.flatten(Eigen::Vector3i(2, 2, 2))).norm() == 0.0);
  CHECK_THROWS(GridFunction::zeros(1, 2.0, 7));
  CHECK_THROWS(GridFunction::zeros(4, 2.0, 8));
  CHECK_THROWS(GridFunction::zeros(1, -1.0, 8));
}

TEST_CASE("basis frames") {
  Rng rng(4);
  const Index n = 7;
  std::vector<BasisFrame> frames{BasisFrame::standard(n), BasisFrame::character(n),
                                 BasisFrame::random_unitary(n, 5, "r5")};
  for (const auto& f : frames) {
    const ComplexMatrix U = f.columns();
    CHECK((U.adjoint() * U - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    const StateVector x = random_state(n, rng);
    const StateVector a = f.analyze(x);
    CHECK(max_abs(a - f.scale() * U.adjoint() * x) < 1e-13);
    CHECK(max_abs(f.synthesize(a) - x) < 1e-13);
  }
  // character coefficients are the expansion coefficients
  const StateVector x = random_state(n, rng);
  CHECK(max_abs(frames[1].analyze(x) - oracle::dft_direct(x)) < 1e-13);
  CHECK(frames[1].scale() == doctest::Approx(1.0 / std::sqrt(7.0)));

  // the same seed gives the same frame
  CHECK(max_abs((BasisFrame::random_unitary(n, 5, "a").columns() - frames[2].columns()).reshaped()) == 0.0);

  ComplexMatrix bad = ComplexMatrix::Identity(3, 3);
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(BasisFrame::dense(bad, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(frames[0].analyze(StateVector::Zero(3)), std::invalid_argument);

  SUBCASE("grid momentum frame") {
    const BasisFrame m = BasisFrame::grid_momentum(5.0, 32);
    const ComplexMatrix U = m.columns();
    CHECK((U.adjoint() * U - ComplexMatrix::Identity(32, 32)).cwiseAbs().maxCoeff() < 1e-12);
    const StateVector y = random_state(32, rng);
    const GridFunction g(1, 5.0, 32, y);
    CHECK(max_abs(m.analyze(y) - grid_fourier(g).values()) < 1e-15);
    CHECK(max_abs(m.synthesize(m.analyze(y)) - y) < 1e-13);
  }
}
