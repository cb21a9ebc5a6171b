// gaussian.hpp
// Gaussian exponentials psi(x) = a exp(-1/2 x^T A x), A = A1 + i A2, in closed
// form: Fourier transforms, the linear change-of-variables identities, and
// the complete solution set for Gaussian position/momentum magnitude data.

#pragma once

#include "pauli/statespace.hpp"

#include <vector>

namespace pauli {

struct GaussianState {
  cplx amplitude{1.0, 0.0};
  RealMatrix A1;  // symmetric positive definite
  RealMatrix A2;  // symmetric

  Index dim() const { return A1.rows(); }
  ComplexMatrix matrix() const;
  /// Throws unless A1, A2 are square, same size, symmetric to 1e-12 and A1 > 0.
  void validate() const;
  cplx operator()(const Eigen::VectorXd& x) const;
  /// Closed-form L2 norm |a| (pi^l / det A1)^{1/4}.
  double norm() const;
};

/// Standard form: amplitude 1, A = I.
GaussianState standard_gaussian(Index l);

GridFunction sample(const GaussianState& g, double extent, Index points);

/// Real invertible C with C^T A1 C = I (C = L^{-T} from A1 = L L^T, so
/// diagonal inputs give diagonal C). Throws for non-positive-definite A1,
/// naming the smallest eigenvalue.
RealMatrix congruence_reduce(const RealMatrix& A1);

/// T and lambda with T^T A T = I + i diag(lambda): T = C Q where Q
/// diagonalizes C^T A2 C.
struct CongruenceForm {
  RealMatrix transform;
  RealVector lambda;
};
CongruenceForm reduce(const GaussianState& g);

/// Exact transform under psi_hat(p) = (2 pi)^{-l/2} int psi(x) exp(i p.x) dx:
/// matrix B = A^{-1}, amplitude a |det T| prod (1 + i lambda_j)^{-1/2}.
GaussianState gaussian_fourier(const GaussianState& g);

struct ScalingLemmaReport {
  double transform_deviation = 0.0;  // psi_C hat vs |det C|^{-1} psi_hat(C^{-T} p)
  double norm_deviation = 0.0;       // |psi_C| vs |det C|^{-1/2} |psi|
  double max_deviation = 0.0;
  bool pass = false;
};

inline constexpr double kScalingLemmaTolerance = 1e-10;

/// Both identities for psi_C(x) = psi(C x), evaluated in closed form; the
/// transform identity is compared on the parameters and at fixed momenta.
ScalingLemmaReport scaling_lemma_check(const GaussianState& g, const RealMatrix& C);

/// mu_j in (0, 1]; |psi| = pi^{-l/2} exp(-x^T x / 2) and
/// |psi_hat| proportional to exp(-p^T B1 p / 2), B1 = diag(mu_j^2).
struct GaussianMagnitudeData {
  RealVector mu;

  void validate() const;
  /// b = prod mu_j: peak ratio of the momentum density |psi_hat|^2 to the
  /// position density |psi|^2.
  double b() const { return mu.prod(); }
};

struct CommutantBlock {
  std::vector<Index> indices;  // indices sharing one mu value
  double mu = 0.0;
  double lambda = 0.0;
  Index group_dimension = 0;   // dim O(s) = s(s-1)/2
};

struct OrbitRepresentative {
  RealMatrix A2;          // diag(sign_j lambda_j)
  Eigen::VectorXi signs;  // +1 / -1; +1 wherever lambda_j = 0
  Index orbit_dimension = 0;  // sum over blocks of (#plus)(#minus); 0 means a single point
};

struct OrbitSet {
  RealVector mu;
  RealVector lambda;  // nonnegative roots of (1 - mu^2) / mu^2
  std::vector<OrbitRepresentative> representatives;
  std::vector<CommutantBlock> blocks;

  /// Orthogonal sigma commuting with B1: a rotation by `angle` in the plane
  /// of the first two indices of block `block` (requires a block of size >= 2).
  RealMatrix commutant_rotation(std::size_t block, double angle) const;
};

/// All solutions A2 of A2^2 = (I - B1) B1^{-1}: 2^k sign representatives,
/// k = #{j : mu_j < 1}, plus the commutant structure of B1 that generates
/// the continuous orbits when mu values repeat.
OrbitSet solve_gaussian_pauli(const GaussianMagnitudeData& data);

struct GaussianVerification {
  double matrix_residual = 0.0;    // max |B1 - diag(mu^2)|
  double square_residual = 0.0;    // max |A2^2 - (I - B1) B1^{-1}|
  double relation_residual = 0.0;  // max of |B1 - A2 B2 - I|, |A2 B1 + B2|
  double density_ratio = 0.0;      // |a_hat|^2 / |a|^2
  double amplitude_ratio = 0.0;    // |a_hat| / |a|
  double ratio_deviation = 0.0;    // |density_ratio - prod mu|
  bool pass = false;
};

inline constexpr double kGaussianVerifyTolerance = 1e-10;

/// Builds psi with A1 = I and amplitude pi^{-l/2}, transforms it, and compares
/// the momentum magnitude against the data.
GaussianVerification verify_gaussian_solution(const RealMatrix& A2, const GaussianMagnitudeData& data,
                                              double tol = kGaussianVerifyTolerance);

}  // namespace pauli
