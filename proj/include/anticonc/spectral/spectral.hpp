#pragma once

// Singular-value inequalities for products and traces, the cosine spectrum
// of (U + U*)/2, and the two elementary trigonometric bounds.

#include <cstddef>
#include <vector>

#include "anticonc/linalg/matrix.hpp"

namespace anticonc::spectral {

using linalg::Complex;
using linalg::Matrix;

inline constexpr std::size_t kMaxSvdSize = 2048;

struct SingularProfile {
  std::size_t size = 0;
  std::vector<double> values;  // nonincreasing, >= 0
};

/// Throws InvalidInput above kMaxSvdSize, NoConvergence from the iteration.
SingularProfile singular_values(const Matrix& m);

struct TraceBound {
  double abs_trace = 0.0;
  double singular_sum = 0.0;
  bool pass = false;  // |tr M| <= sum s_i + 1e-9 d
};
TraceBound verify_trace_bound(const Matrix& m);

struct ProductBoundReport {
  std::size_t size = 0;
  bool single_pass = true;   // s_k(MM') <= min(s_k(M) s_1(M'), s_1(M) s_k(M'))
  bool product_pass = true;  // prod_{j<=k} s_j(MM') <= prod s_j(M) prod s_j(M')
  double worst_single_ratio = 0.0;   // max over k of lhs / rhs (0 when rhs is 0 and lhs is 0)
  double worst_product_ratio = 0.0;
  bool pass() const { return single_pass && product_pass; }
};

/// Both inequalities for every 1 <= k <= d with 1e-9 relative slack.
ProductBoundReport verify_product_bounds(const Matrix& m, const Matrix& mp);

struct CosSpectrum {
  std::vector<double> abs_real_eigenvalues;  // sorted nonincreasing
  std::vector<double> singular_values;       // of (U + U*)/2, nonincreasing
  double max_deviation = 0.0;
  bool pass = false;  // max_deviation <= 1e-8
};

/// Throws NotUnitary when ||U U* - I||_max > 1e-8.
CosSpectrum cos_spectrum(const Matrix& u);

struct TrigBounds {
  double sin_violation = 0.0;  // max of t/2 - sin t on [0, pi/2]
  double cos_violation = 0.0;  // max of cos t - exp(-t^2/4) on [0, pi]
  double chain_violation = 0.0;  // max of exp(-t^2/4) - exp(-2 t^2/pi^2) on [0, pi]
  std::size_t points = 0;
  bool pass = false;  // all violations <= 1e-12
};

/// Grid evaluation with step h <= 1e-3 (both endpoints included).
TrigBounds trig_bounds(double h);

}  // namespace anticonc::spectral
