#include "anticonc/spectral/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "anticonc/linalg/decompositions.hpp"
#include "anticonc/util/error.hpp"

namespace anticonc::spectral {

namespace {

constexpr double kRelativeSlack = 1e-9;

/// lhs <= rhs with relative slack; `floor` absorbs rounding noise when rhs is zero.
bool within(double lhs, double rhs, double floor) { return lhs <= rhs * (1.0 + kRelativeSlack) + floor; }

double ratio(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  return lhs > 0.0 ? INFINITY : 0.0;
}

}  // namespace

SingularProfile singular_values(const Matrix& m) {
  if (!m.square()) throw Error(Errc::invalid_input, "singular values need a square matrix");
  if (m.rows() > kMaxSvdSize) throw Error(Errc::invalid_input, "matrix larger than " + std::to_string(kMaxSvdSize));
  SingularProfile p;
  p.size = m.rows();
  p.values = linalg::singular_values(m);
  for (auto& s : p.values) s = std::max(s, 0.0);
  return p;
}

TraceBound verify_trace_bound(const Matrix& m) {
  const auto s = spectral::singular_values(m);
  TraceBound t;
  t.abs_trace = std::abs(m.trace());
  for (double v : s.values) t.singular_sum += v;
  t.pass = t.abs_trace <= t.singular_sum + 1e-9 * static_cast<double>(m.rows());
  return t;
}

ProductBoundReport verify_product_bounds(const Matrix& m, const Matrix& mp) {
  if (m.rows() != mp.rows() || !m.square() || !mp.square()) {
    throw Error(Errc::invalid_input, "product bounds need square matrices of equal size");
  }
  const auto a = spectral::singular_values(m).values;
  const auto b = spectral::singular_values(mp).values;
  const auto ab = spectral::singular_values(m * mp).values;
  ProductBoundReport r;
  r.size = m.rows();
  // Products are compared in the log domain so long runs of small values do not underflow.
  const double noise = 1e-13 * a[0] * b[0];
  double log_ab = 0.0, log_a = 0.0, log_b = 0.0;
  for (std::size_t k = 0; k < r.size; ++k) {
    const double single_rhs = std::min(a[k] * b[0], a[0] * b[k]);
    if (!within(ab[k], single_rhs, noise)) r.single_pass = false;
    r.worst_single_ratio = std::max(r.worst_single_ratio, ratio(ab[k], single_rhs));

    log_ab += std::log(ab[k]);
    log_a += std::log(a[k]);
    log_b += std::log(b[k]);
    const double rhs = log_a + log_b;
    const bool ok = std::isinf(rhs) ? ab[k] <= noise : log_ab <= rhs + std::log1p(kRelativeSlack);
    if (!ok) r.product_pass = false;
    if (std::isfinite(log_ab) && std::isfinite(rhs)) {
      r.worst_product_ratio = std::max(r.worst_product_ratio, std::exp(log_ab - rhs));
    }
  }
  return r;
}

CosSpectrum cos_spectrum(const Matrix& u) {
  if (!u.square()) throw Error(Errc::invalid_input, "cos spectrum needs a square matrix");
  if (linalg::unitarity_defect(u) > 1e-8) throw Error(Errc::not_unitary, "matrix is not unitary within 1e-8");
  const std::size_t d = u.rows();
  const Matrix ua = u.adjoint();
  const Matrix h1 = (u + ua) * Complex(0.5);
  const Matrix h2 = (u - ua) * Complex(0.0, -0.5);
  // H1 and H2 commute; a generic real combination has the eigenvectors of U.
  const double c = 0.5772156649015329;
  const auto eig = linalg::hermitian_eigen(h1 + h2 * Complex(c));
  CosSpectrum out;
  for (std::size_t k = 0; k < d; ++k) {
    Complex lambda = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < d; ++j) row += u(i, j) * eig.vectors(j, k);
      lambda += std::conj(eig.vectors(i, k)) * row;
    }
    out.abs_real_eigenvalues.push_back(std::abs(lambda.real()));
  }
  std::sort(out.abs_real_eigenvalues.begin(), out.abs_real_eigenvalues.end(), std::greater<>());
  out.singular_values = spectral::singular_values(h1).values;
  for (std::size_t k = 0; k < d; ++k) {
    out.max_deviation = std::max(out.max_deviation, std::abs(out.abs_real_eigenvalues[k] - out.singular_values[k]));
  }
  out.pass = out.max_deviation <= 1e-8;
  return out;
}

TrigBounds trig_bounds(double h) {
  if (!(h > 0.0 && h <= 1e-3)) throw Error(Errc::invalid_input, "grid step must lie in (0, 1e-3]");
  constexpr double pi = std::numbers::pi;
  TrigBounds t;
  t.sin_violation = -INFINITY;
  t.cos_violation = -INFINITY;
  t.chain_violation = -INFINITY;
  const auto steps_half = static_cast<std::size_t>(std::ceil((pi / 2) / h));
  for (std::size_t k = 0; k <= steps_half; ++k) {
    const double x = std::min(pi / 2, static_cast<double>(k) * h);
    t.sin_violation = std::max(t.sin_violation, x / 2 - std::sin(x));
    ++t.points;
  }
  const auto steps = static_cast<std::size_t>(std::ceil(pi / h));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double x = std::min(pi, static_cast<double>(k) * h);
    const double g = std::exp(-x * x / 4);
    t.cos_violation = std::max(t.cos_violation, std::cos(x) - g);
    t.chain_violation = std::max(t.chain_violation, g - std::exp(-2 * x * x / (pi * pi)));
    ++t.points;
  }
  t.pass = t.sin_violation <= 1e-12 && t.cos_violation <= 1e-12 && t.chain_violation <= 1e-12;
  return t;
}

}  // namespace anticonc::spectral
