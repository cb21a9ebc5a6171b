// gaussian.cpp

#include "pauli/gaussian.hpp"

#include <Eigen/Eigenvalues>

namespace pauli {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

double asymmetry(const RealMatrix& m) { return (m - m.transpose()).cwiseAbs().maxCoeff(); }

RealMatrix symmetrized(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

double relative_max(const auto& diff, const auto& ref) {
  const double scale = ref.cwiseAbs().maxCoeff();
  return diff.cwiseAbs().maxCoeff() / (scale > 0.0 ? scale : 1.0);
}

}  // namespace

ComplexMatrix GaussianState::matrix() const {
  return A1.cast<cplx>() + cplx(0.0, 1.0) * A2.cast<cplx>();
}

void GaussianState::validate() const {
  if (A1.rows() < 1 || A1.rows() != A1.cols() || A2.rows() != A1.rows() || A2.cols() != A1.cols()) {
    throw std::invalid_argument("GaussianState: A1 and A2 must be square of the same size");
  }
  if (asymmetry(A1) > kSymmetryTolerance || asymmetry(A2) > kSymmetryTolerance) {
    throw std::invalid_argument("GaussianState: A1 and A2 must be symmetric");
  }
  const double lo = Eigen::SelfAdjointEigenSolver<RealMatrix>(symmetrized(A1), Eigen::EigenvaluesOnly)
                        .eigenvalues()
                        .minCoeff();
  if (!(lo > 0.0)) {
    throw std::invalid_argument("GaussianState: A1 not positive definite (smallest eigenvalue " +
                                std::to_string(lo) + ")");
  }
}

cplx GaussianState::operator()(const Eigen::VectorXd& x) const {
  const double re = x.dot(A1 * x);
  const double im = x.dot(A2 * x);
  return amplitude * std::exp(cplx(-0.5 * re, -0.5 * im));
}

double GaussianState::norm() const {
  const double l = static_cast<double>(dim());
  return std::abs(amplitude) * std::pow(std::pow(std::numbers::pi, l) / A1.determinant(), 0.25);
}

GaussianState standard_gaussian(Index l) {
  return GaussianState{cplx(1.0, 0.0), RealMatrix::Identity(l, l), RealMatrix::Zero(l, l)};
}

GridFunction sample(const GaussianState& g, double extent, Index points) {
  g.validate();
  return GridFunction::sample(static_cast<int>(g.dim()), extent, points,
                              [&g](const Eigen::VectorXd& x) { return g(x); });
}

RealMatrix congruence_reduce(const RealMatrix& A1) {
  if (A1.rows() < 1 || A1.rows() != A1.cols()) {
    throw std::invalid_argument("congruence_reduce: square matrix required");
  }
  if (asymmetry(A1) > kSymmetryTolerance) throw std::invalid_argument("congruence_reduce: matrix not symmetric");
  const RealMatrix s = symmetrized(A1);
  Eigen::LLT<RealMatrix> llt(s);
  const double lo =
      Eigen::SelfAdjointEigenSolver<RealMatrix>(s, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  if (llt.info() != Eigen::Success || !(lo > 0.0)) {
    throw std::invalid_argument("congruence_reduce: matrix not positive definite (smallest eigenvalue " +
                                std::to_string(lo) + ")");
  }
  const Index n = s.rows();
  RealMatrix lower = llt.matrixL();
  // C = L^{-T}
  return lower.transpose().triangularView<Eigen::Upper>().solve(RealMatrix::Identity(n, n));
}

CongruenceForm reduce(const GaussianState& g) {
  g.validate();
  const RealMatrix c = congruence_reduce(g.A1);
  const RealMatrix m = symmetrized(c.transpose() * g.A2 * c);
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(m);
  return CongruenceForm{c * eig.eigenvectors(), eig.eigenvalues()};
}

GaussianState gaussian_fourier(const GaussianState& g) {
  const CongruenceForm form = reduce(g);
  const Index l = g.dim();
  const ComplexMatrix t = form.transform.cast<cplx>();
  Eigen::VectorXcd inv_diag(l);
  cplx amp = g.amplitude * std::abs(form.transform.determinant());
  for (Index j = 0; j < l; ++j) {
    const cplx d(1.0, form.lambda(j));
    inv_diag(j) = 1.0 / d;
    amp /= std::sqrt(d);  // principal root, Re > 0
  }
  const ComplexMatrix b = t * inv_diag.asDiagonal() * t.transpose();
  return GaussianState{amp, symmetrized(b.real()), symmetrized(b.imag())};
}

ScalingLemmaReport scaling_lemma_check(const GaussianState& g, const RealMatrix& C) {
  g.validate();
  const Index l = g.dim();
  if (C.rows() != l || C.cols() != l) throw std::invalid_argument("scaling_lemma_check: C has wrong shape");
  Eigen::FullPivLU<RealMatrix> lu(C);
  if (!lu.isInvertible()) throw std::invalid_argument("scaling_lemma_check: C is singular");
  const double det = std::abs(C.determinant());
  const RealMatrix c_inv = lu.inverse();

  const GaussianState scaled{g.amplitude, symmetrized(C.transpose() * g.A1 * C),
                             symmetrized(C.transpose() * g.A2 * C)};
  const GaussianState lhs = gaussian_fourier(scaled);
  const GaussianState base = gaussian_fourier(g);
  const GaussianState rhs{base.amplitude / det, symmetrized(c_inv * base.A1 * c_inv.transpose()),
                          symmetrized(c_inv * base.A2 * c_inv.transpose())};

  ScalingLemmaReport r;
  r.transform_deviation = std::abs(lhs.amplitude - rhs.amplitude) / std::abs(rhs.amplitude);
  r.transform_deviation = std::max(r.transform_deviation, relative_max(lhs.matrix() - rhs.matrix(), rhs.matrix()));

  // Pointwise: psi_C hat(p) against |det C|^{-1} psi_hat(C^{-T} p).
  std::vector<Eigen::VectorXd> momenta{Eigen::VectorXd::Zero(l), Eigen::VectorXd::Constant(l, 0.3)};
  for (Index k = 0; k < l; ++k) momenta.push_back(0.5 * Eigen::VectorXd::Unit(l, k));
  for (const auto& p : momenta) {
    const cplx left = lhs(p);
    const cplx right = base(c_inv.transpose() * p) / det;
    r.transform_deviation = std::max(r.transform_deviation, std::abs(left - right) / std::abs(right));
  }

  const double expected_norm = g.norm() / std::sqrt(det);
  r.norm_deviation = std::abs(scaled.norm() - expected_norm) / expected_norm;
  r.max_deviation = std::max(r.transform_deviation, r.norm_deviation);
  r.pass = r.max_deviation <= kScalingLemmaTolerance;
  return r;
}

void GaussianMagnitudeData::validate() const {
  if (mu.size() < 1) throw std::invalid_argument("GaussianMagnitudeData: mu must be non-empty");
  for (Index j = 0; j < mu.size(); ++j) {
    if (!(mu(j) > 0.0 && mu(j) <= 1.0)) {
      throw std::invalid_argument("GaussianMagnitudeData: mu_" + std::to_string(j) + " = " +
                                  std::to_string(mu(j)) + " outside (0, 1]");
    }
  }
}

RealMatrix OrbitSet::commutant_rotation(std::size_t block, double angle) const {
  if (block >= blocks.size() || blocks[block].indices.size() < 2) {
    throw std::invalid_argument("commutant_rotation: block of size >= 2 required");
  }
  const Index l = mu.size();
  RealMatrix sigma = RealMatrix::Identity(l, l);
  const Index i = blocks[block].indices[0];
  const Index j = blocks[block].indices[1];
  sigma(i, i) = std::cos(angle);
  sigma(j, j) = std::cos(angle);
  sigma(i, j) = -std::sin(angle);
  sigma(j, i) = std::sin(angle);
  return sigma;
}

OrbitSet solve_gaussian_pauli(const GaussianMagnitudeData& data) {
  data.validate();
  const Index l = data.mu.size();
  OrbitSet out;
  out.mu = data.mu;
  out.lambda.resize(l);
  std::vector<Index> free;
  for (Index j = 0; j < l; ++j) {
    const double m2 = data.mu(j) * data.mu(j);
    out.lambda(j) = std::sqrt((1.0 - m2) / m2);
    if (out.lambda(j) > 0.0) free.push_back(j);
  }
  if (free.size() > 24) throw std::invalid_argument("solve_gaussian_pauli: too many sign choices to enumerate");

  std::vector<bool> assigned(static_cast<std::size_t>(l), false);
  for (Index j = 0; j < l; ++j) {
    if (assigned[static_cast<std::size_t>(j)]) continue;
    CommutantBlock block;
    block.mu = data.mu(j);
    block.lambda = out.lambda(j);
    for (Index k = j; k < l; ++k) {
      if (!assigned[static_cast<std::size_t>(k)] && std::abs(data.mu(k) - data.mu(j)) <= 1e-12) {
        block.indices.push_back(k);
        assigned[static_cast<std::size_t>(k)] = true;
      }
    }
    const auto s = static_cast<Index>(block.indices.size());
    block.group_dimension = s * (s - 1) / 2;
    out.blocks.push_back(std::move(block));
  }

  const std::uint64_t count = std::uint64_t{1} << free.size();
  out.representatives.reserve(count);
  for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
    OrbitRepresentative rep;
    rep.signs = Eigen::VectorXi::Ones(l);
    for (std::size_t b = 0; b < free.size(); ++b) {
      if ((pattern >> b) & 1U) rep.signs(free[b]) = -1;
    }
    rep.A2 = (rep.signs.cast<double>().array() * out.lambda.array()).matrix().asDiagonal();
    for (const auto& block : out.blocks) {
      if (!(block.lambda > 0.0)) continue;
      Index plus = 0;
      for (Index k : block.indices) plus += rep.signs(k) > 0 ? 1 : 0;
      rep.orbit_dimension += plus * (static_cast<Index>(block.indices.size()) - plus);
    }
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

GaussianVerification verify_gaussian_solution(const RealMatrix& A2, const GaussianMagnitudeData& data,
                                              double tol) {
  data.validate();
  const Index l = data.mu.size();
  if (A2.rows() != l || A2.cols() != l) throw std::invalid_argument("verify_gaussian_solution: shape mismatch");

  const double a = std::pow(std::numbers::pi, -0.5 * static_cast<double>(l));
  const GaussianState psi{cplx(a, 0.0), RealMatrix::Identity(l, l), A2};
  const GaussianState hat = gaussian_fourier(psi);

  const RealVector mu2 = data.mu.array().square();
  const RealMatrix b1_target = mu2.asDiagonal();
  const RealMatrix target_square = ((1.0 - mu2.array()) / mu2.array()).matrix().asDiagonal();
  const RealMatrix eye = RealMatrix::Identity(l, l);

  GaussianVerification v;
  v.matrix_residual = (hat.A1 - b1_target).cwiseAbs().maxCoeff();
  v.square_residual = (A2 * A2 - target_square).cwiseAbs().maxCoeff();
  v.relation_residual = std::max((hat.A1 - A2 * hat.A2 - eye).cwiseAbs().maxCoeff(),
                                 (A2 * hat.A1 + hat.A2).cwiseAbs().maxCoeff());
  v.amplitude_ratio = std::abs(hat.amplitude) / a;
  v.density_ratio = v.amplitude_ratio * v.amplitude_ratio;
  v.ratio_deviation = std::abs(v.density_ratio - data.b());
  v.pass = v.matrix_residual <= tol && v.ratio_deviation <= tol && v.relation_residual <= tol;
  return v;
}

}  // namespace pauli
