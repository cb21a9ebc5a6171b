#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pauli/constructions.hpp"

using namespace pauli;

namespace {

double max_abs(const StateVector& v) { return v.cwiseAbs().maxCoeff(); }

GridFunction chirped_gaussian(const GridParams& g) {
  return GridFunction::sample(1, g.extent, g.points, [](const Eigen::VectorXd& x) {
    const double t = x(0);
    return std::exp(-0.5 * t * t) * std::polar(1.0, t - t * t);
  });
}

bool positions_bitwise_equal(const GridFunction& a, const GridFunction& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) != std::abs(b[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("odd primes") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 97, 7919}) CHECK(is_odd_prime(p));
  for (std::int64_t p : {-3, 0, 1, 2, 4, 9, 15, 91, 7917}) CHECK_FALSE(is_odd_prime(p));
}

TEST_CASE("Gauss states") {
  const double w = 2.0 * std::numbers::pi / 3.0;
  StateVector e0 = StateVector::Ones(3);
  CHECK(max_abs(gauss_state({3, 0}) - e0) < 1e-15);
  StateVector e1(3);
  e1 << 1.0, std::polar(1.0, w), std::polar(1.0, w);
  CHECK(max_abs(gauss_state({3, 1}) - e1) < 1e-15);
  const int sq[5] = {0, 1, 4, 4, 1};
  const StateVector g52 = gauss_state({5, 2});
  for (int m = 0; m < 5; ++m) CHECK(std::abs(g52(m) - std::polar(1.0, 2.0 * std::numbers::pi * 2 * sq[m] / 5.0)) < 1e-15);

  for (std::int64_t p : {3, 5, 7, 11}) {
    for (std::int64_t a = 0; a < p; ++a) CHECK(max_abs(gauss_state({p, a}) - oracle::gauss(p, a)) < 1e-13);
  }
  CHECK_THROWS_AS(gauss_state({4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gauss_state({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(gauss_state({5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(gauss_state({5, -1}), std::invalid_argument);
}

TEST_CASE("Gauss sums have modulus sqrt(p)") {
  for (std::int64_t p = 3; p < 100; ++p) {
    if (!is_odd_prime(p)) continue;
    for (std::int64_t a = 1; a < p; ++a) {
      REQUIRE(std::abs(oracle::gauss_sum(p, a)) == doctest::Approx(std::sqrt(double(p))).epsilon(1e-12));
    }
  }
}

TEST_CASE("flat delta and character profiles") {
  const Prop2Report r3 = verify_prop2(3, 1e-12);
  CHECK(r3.pass);
  CHECK(r3.max_dev_delta_basis < 1e-14);
  CHECK(r3.max_dev_char_basis < 1e-14);
  CHECK(verify_prop2(13, 1e-12).pass);
  for (std::int64_t p = 3; p < 100; ++p) {
    if (is_odd_prime(p)) REQUIRE(verify_prop2(p, 1e-12).pass);
  }
  CHECK_THROWS_AS(verify_prop2(9, 1e-12), std::invalid_argument);
  CHECK_THROWS_AS(verify_prop2(7, 0.0), std::invalid_argument);

  // a = 0 is excluded: its character coefficients are a point mass.
  const StateVector c0 = delta_character_frames(5)[1].analyze(gauss_state({5, 0}));
  CHECK(std::abs(c0(0) - 1.0) < 1e-15);
  CHECK(c0.tail(4).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Gauss states are pairwise at distance sqrt(1 - 1/p)") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = a + 1; b < p; ++b) {
        const double d = projective_distance(gauss_state({p, a}), gauss_state({p, b}));
        // <psi_a, psi_b> is the Gauss sum for b - a.
        const double expect = std::sqrt(1.0 - std::norm(oracle::gauss_sum(p, b - a)) / double(p * p));
        CHECK(d == doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::abs(d - std::sqrt(1.0 - 1.0 / double(p))) < 1e-10);
      }
    }
  }
}

TEST_CASE("chirp") {
  const GridParams g{40.0, 4096};
  const ChirpSample c = chirp({1.0}, g);
  CHECK(c.samples[g.points / 2] == cplx(1.0, 0.0));
  CHECK((c.samples.moduli().array() - 1.0).abs().maxCoeff() < 1e-15);
  CHECK(c.closed_form_magnitude == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(chirp({-2.0}, g).closed_form_magnitude == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(chirp({0.0}, g), std::invalid_argument);

  SUBCASE("stationary-phase oracle at 8 interior momenta") {
    const GridFunction h = grid_fourier(c.samples);
    const double dp = std::numbers::pi / g.extent;
    for (double target : {-30.0, -20.0, -10.0, -3.0, 2.0, 9.0, 17.0, 29.0}) {
      const Index j = static_cast<Index>(std::llround(target / dp)) + g.points / 2;
      const double p = h.coordinate(j);
      const cplx q = oracle::simpson([&](double x) { return std::polar(1.0, x * x + p * x); }, -g.extent, g.extent,
                                     800000) /
                     std::sqrt(2.0 * std::numbers::pi);
      CHECK(std::abs(h[j] - q) < 5e-3);
      CHECK(std::abs(std::abs(q) - c.closed_form_magnitude) < 0.2 * c.closed_form_magnitude);
    }
  }

  SUBCASE("flatness report") {
    const ChirpFlatness f = chirp_flatness({1.0}, g);
    CHECK(f.window == doctest::Approx(40.0));
    CHECK(f.window_samples > 1000);
    CHECK(f.max_relative_deviation < 0.2);
    CHECK(f.min_magnitude <= f.max_magnitude);
  }
}

TEST_CASE("reflect-conjugate") {
  const GridParams g = kDefaultGrid1D;

  SUBCASE("real even input is a fixed point") {
    const GridFunction r = GridFunction::sample(1, g.extent, g.points,
                                                [](const Eigen::VectorXd& x) { return cplx(std::exp(-x(0) * x(0))); });
    CHECK(max_abs(reflect_conjugate(r).values() - r.values()) == 0.0);
  }

  SUBCASE("odd phase is a fixed point") {
    const GridFunction r = GridFunction::sample(1, g.extent, g.points, [](const Eigen::VectorXd& x) {
      const double t = x(0);
      return std::exp(-0.5 * t * t) * std::polar(1.0, t * t * t - 2.0 * t);
    });
    CHECK(max_abs(reflect_conjugate(r).values() - r.values()) < 1e-15);
  }

  SUBCASE("chirped Gaussian") {
    const GridFunction psi = chirped_gaussian(g);
    const GridFunction psi1 = reflect_conjugate(psi);
    // closed form of the partner
    double err = 0.0;
    for (Index i = 0; i < psi.size(); ++i) {
      const double t = psi1.coordinate(i);
      err = std::max(err, std::abs(psi1[i] - std::exp(-0.5 * t * t) * std::polar(1.0, t + t * t)));
    }
    CHECK(err < 1e-12);
    CHECK(positions_bitwise_equal(psi, psi1));

    const GridFunction h = grid_fourier(psi);
    const GridFunction h1 = grid_fourier(psi1);
    CHECK((h.moduli() - h1.moduli()).cwiseAbs().maxCoeff() < 1e-8);
    // even modulus: the partner's transform is the conjugate
    CHECK(max_abs(h1.values() - h.values().conjugate()) < 1e-8);

    const PairCertificate cert = certify_pair({psi, psi1});
    CHECK(cert.position_bitwise_equal);
    CHECK(cert.max_position_deviation == 0.0);
    CHECK(cert.max_momentum_deviation < 1e-8);
    CHECK(cert.projective_distance >= 0.05);
    CHECK(cert.projective_distance == doctest::Approx(projective_distance(psi.values(), psi1.values())));

    // involution wherever the modulus is not negligible
    const GridFunction twice = reflect_conjugate(psi1);
    for (Index i = 0; i < psi.size(); ++i) {
      if (std::abs(psi[i]) > 1e-12) REQUIRE(std::abs(twice[i] - psi[i]) < 1e-14);
    }
  }

  SUBCASE("zero samples get phase zero") {
    GridFunction z = GridFunction::zeros(1, 2.0, 8);
    z.values()(3) = cplx(0.0, 2.0);
    const GridFunction out = reflect_conjugate(z);
    // the mirror of index 3 is index 5, which is zero
    CHECK(out[3] == cplx(2.0, 0.0));
    CHECK(out[5] == cplx(0.0, 0.0));
  }

  CHECK_THROWS_AS(reflect_conjugate(GridFunction::zeros(3, 2.0, 4)), std::invalid_argument);
}

TEST_CASE("certify_pair rejects mismatched grids") {
  const GridFunction a = GridFunction::zeros(1, 2.0, 8);
  const GridFunction b = GridFunction::zeros(1, 3.0, 8);
  CHECK_THROWS_AS(certify_pair({a, b}), std::invalid_argument);
}

TEST_CASE("Kontsevich family") {
  const GridParams g = kDefaultGrid3D;

  SUBCASE("identity rotation gives identical states") {
    const StatePair pair = kontsevich_pair({1.0, 1.0, Eigen::Matrix3d::Identity(), 1.0}, g);
    CHECK(max_abs(pair.first.values() - pair.second.values()) == 0.0);
  }

  SUBCASE("reflection of x3 leaves the state unchanged") {
    const Eigen::Matrix3d flip = Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal();
    const StatePair pair = kontsevich_pair({1.0, 1.0, flip, 1.0}, g);
    CHECK(max_abs(pair.first.values() - pair.second.values()) == 0.0);
  }

  SUBCASE("quarter turn about x1") {
    const Eigen::Matrix3d sigma = axis_rotation(0, std::numbers::pi / 2);
    CHECK((sigma.transpose() * sigma - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    const StatePair pair = kontsevich_pair({1.0, 1.0, sigma, 1.0}, g);
    CHECK(positions_bitwise_equal(pair.first, pair.second));

    // closed form of both members
    double err = 0.0;
    for (Index i = 0; i < pair.first.size(); ++i) {
      const Eigen::VectorXd x = pair.first.position(i);
      const Eigen::Vector3d y = sigma * x;
      auto psi0 = [](const Eigen::Vector3d& v) {
        return std::exp(cplx(-v.squaredNorm(), -(v(0) * v(0) + v(1) * v(1) - v(2) * v(2))));
      };
      err = std::max({err, std::abs(pair.first[i] - psi0(x)), std::abs(pair.second[i] - psi0(y))});
    }
    CHECK(err < 1e-14);

    const PairCertificate cert = certify_pair(pair);
    CHECK(cert.position_bitwise_equal);
    CHECK(cert.max_momentum_relative_deviation < 1e-6);
    CHECK(cert.projective_distance > 0.1);
  }

  CHECK_THROWS_AS(kontsevich_pair({1.0, 1.0, 2.0 * Eigen::Matrix3d::Identity(), 1.0}, g), std::invalid_argument);
  CHECK_THROWS_AS(kontsevich_pair({0.0, 1.0, Eigen::Matrix3d::Identity(), 1.0}, g), std::invalid_argument);
  CHECK_THROWS_AS(kontsevich_pair({1.0, 0.0, Eigen::Matrix3d::Identity(), 1.0}, g), std::invalid_argument);
  CHECK_THROWS_AS(axis_rotation(3, 1.0), std::invalid_argument);
}

TEST_CASE("spherical conjugate pairs") {
  const GridParams g = kDefaultGrid3D;

  SUBCASE("real profile gives identical states") {
    const StatePair pair = spherical_conjugate_pair([](double r) { return cplx(std::exp(-r * r)); }, g);
    CHECK(max_abs(pair.first.values() - pair.second.values()) == 0.0);
    CHECK(certify_pair(pair).projective_distance < 1e-12);
  }

  SUBCASE("chirped radial profile") {
    const StatePair pair =
        spherical_conjugate_pair([](double r) { return std::exp(cplx(-0.5 * r * r, r * r)); }, g);
    const PairCertificate cert = certify_pair(pair);
    CHECK(cert.position_bitwise_equal);
    CHECK(cert.max_momentum_deviation < 1e-8);
    CHECK(cert.projective_distance > 0.3);
    CHECK(max_abs(pair.second.values() - pair.first.values().conjugate()) == 0.0);
  }

  CHECK_THROWS_AS(spherical_conjugate_pair([](double) { return cplx(1.0); }, g), std::invalid_argument);
}
