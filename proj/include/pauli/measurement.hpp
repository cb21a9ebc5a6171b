// measurement.hpp
// Magnitude profiles b_{i nu} = |a_{i nu}(x)| of a state across a set of
// orthonormal frames, membership in the solution set A(b), and the
// embedding-dimension obstruction for three frames.

#pragma once

#include "pauli/statespace.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pauli {

class FrameSet {
 public:
  /// Requires m >= 1 frames of a common dimension with unique labels.
  explicit FrameSet(std::vector<BasisFrame> frames);

  Index dim() const { return frames_.front().dim(); }
  Index size() const { return static_cast<Index>(frames_.size()); }
  const BasisFrame& operator[](Index nu) const { return frames_[static_cast<std::size_t>(nu)]; }
  const std::vector<BasisFrame>& frames() const { return frames_; }

 private:
  std::vector<BasisFrame> frames_;
};

/// Row nu holds the magnitudes of the coefficients in frame nu.
struct MagnitudeProfile {
  RealMatrix values;       // m x n, all entries >= 0
  bool normalized = false; // rows have unit Euclidean norm

  Index frames() const { return values.rows(); }
  Index dim() const { return values.cols(); }

  /// Checks non-negativity and, when `normalized`, unit row norms to 1e-10.
  void validate() const;
};

MagnitudeProfile forward(const StateVector& x, const FrameSet& fs);

/// Root-sum-square of (|a_{i nu}(x)| - b_{i nu}) over all entries.
double residual(const StateVector& x, const FrameSet& fs, const MagnitudeProfile& b);

/// Per-frame contributions to `residual`, before the outer square root.
RealVector residual_by_frame(const StateVector& x, const FrameSet& fs, const MagnitudeProfile& b);

inline constexpr double kDefaultMembershipTolerance = 1e-8;

bool is_member(const StateVector& x, const FrameSet& fs, const MagnitudeProfile& b,
               double tol = kDefaultMembershipTolerance);

/// Population count of k.
unsigned binary_ones(std::uint64_t k);

struct ObstructionRow {
  std::int64_t n = 0;
  std::int64_t lhs = 0;  // 3n - 1
  std::int64_t rhs = 0;  // 4(n-1) - 2 * binary_ones(n-1)
  bool inequality_holds = false;
};

/// Embedding inequality 3n - 1 > 4(n-1) - 2 alpha(n-1). When it fails and
/// m = 3, A(b) cannot be a single ray for every b.
ObstructionRow embedding_obstruction(std::int64_t n);

/// CSV: one line per frame, n comma-separated magnitudes, 17 significant digits.
void write_profile_csv(std::ostream& os, const MagnitudeProfile& b);
MagnitudeProfile read_profile_csv(std::istream& is);

}  // namespace pauli
