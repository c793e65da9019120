#pragma once

// Jacobi-type eigen and singular value decompositions for dense complex
// matrices. Both iterate until the relative off-diagonal mass drops below
// 1e-12 and throw NoConvergence after the sweep cap.

#include <vector>

#include "anticonc/linalg/matrix.hpp"

namespace anticonc::linalg {

inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kMaxSweeps = 100;

struct HermitianEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k belongs to values[k]
};

/// Cyclic complex Jacobi. The input must be Hermitian up to rounding.
HermitianEigen hermitian_eigen(const Matrix& h);

struct Svd {
  Matrix u;                    // left singular vectors (columns)
  std::vector<double> values;  // nonincreasing, clamped at 0
  Matrix v;                    // right singular vectors (columns); M = U diag(s) V*
};

/// One-sided (Hestenes) Jacobi on the columns of a square matrix.
Svd svd(const Matrix& m);

/// Singular values only, nonincreasing.
std::vector<double> singular_values(const Matrix& m);

}  // namespace anticonc::linalg
