#include "anticonc/linalg/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "anticonc/util/error.hpp"

namespace anticonc::linalg {

namespace {

/// Unitary J on coordinates (p, q) with J* [[app, apq], [conj(apq), aqq]] J
/// diagonal: J = diag(1, e^{-i phi}) [[c, s], [-s, c]].
struct Rotation {
  double c = 1.0;
  double s = 0.0;
  Complex phase;  // e^{-i phi}
};

Rotation make_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  Rotation r;
  r.phase = std::conj(apq) / mag;
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  r.c = 1.0 / std::sqrt(1.0 + t * t);
  r.s = t * r.c;
  return r;
}

/// A <- A J on columns p, q.
void rotate_columns(Matrix& a, std::size_t p, std::size_t q, const Rotation& r) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Complex xp = a(i, p);
    const Complex xq = a(i, q) * r.phase;
    a(i, p) = r.c * xp - r.s * xq;
    a(i, q) = r.s * xp + r.c * xq;
  }
}

/// A <- J* A on rows p, q.
void rotate_rows(Matrix& a, std::size_t p, std::size_t q, const Rotation& r) {
  const Complex ph = std::conj(r.phase);
  Complex* rp = a.data() + p * a.cols();
  Complex* rq = a.data() + q * a.cols();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const Complex xp = rp[j];
    const Complex xq = rq[j] * ph;
    rp[j] = r.c * xp - r.s * xq;
    rq[j] = r.s * xp + r.c * xq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const Matrix& h) {
  if (!h.square()) throw Error(Errc::invalid_input, "eigen-decomposition needs a square matrix");
  const std::size_t n = h.rows();
  Matrix a = h;
  Matrix v = Matrix::identity(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) total += std::norm(a(i, j));
  }
  auto off_mass = [&] {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off += std::norm(a(i, j));
      }
    }
    return off;
  };
  const double floor = total * 1e-300;
  int sweep = 0;
  for (;; ++sweep) {
    if (off_mass() <= kJacobiTolerance * kJacobiTolerance * total || total == 0.0) break;
    if (sweep >= kMaxSweeps) throw Error(Errc::no_convergence, "Hermitian Jacobi did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (std::norm(apq) <= floor) continue;
        const Rotation r = make_rotation(a(p, p).real(), a(q, q).real(), apq);
        rotate_columns(a, p, q, r);
        rotate_rows(a, p, q, r);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        rotate_columns(v, p, q, r);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Svd svd(const Matrix& m) {
  if (!m.square()) throw Error(Errc::invalid_input, "svd expects a square matrix");
  const std::size_t n = m.rows();
  Matrix w = m;
  Matrix v = Matrix::identity(n);
  double frob = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) frob += std::norm(m.data()[i]);
  const double negligible = frob * 1e-32;

  for (int sweep = 0;; ++sweep) {
    if (sweep >= kMaxSweeps) throw Error(Errc::no_convergence, "one-sided Jacobi SVD did not converge");
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          alpha += std::norm(w(i, p));
          beta += std::norm(w(i, q));
          gamma += std::conj(w(i, p)) * w(i, q);
        }
        const double g = std::abs(gamma);
        if (g <= kJacobiTolerance * std::sqrt(alpha * beta) || g <= negligible) continue;
        const Rotation r = make_rotation(alpha, beta, gamma);
        rotate_columns(w, p, q, r);
        rotate_columns(v, p, q, r);
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(w(i, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  Svd out;
  out.u = Matrix(n, n);
  out.v = Matrix(n, n);
  out.values.resize(n);
  const double zero_cut = std::sqrt(frob) * 1e-300;
  std::vector<std::size_t> missing;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.values[k] = norms[j];
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
    if (norms[j] > zero_cut) {
      for (std::size_t i = 0; i < n; ++i) out.u(i, k) = w(i, j) / norms[j];
    } else {
      missing.push_back(k);
    }
  }
  // complete U with unit vectors orthogonalized against the filled columns
  for (std::size_t k : missing) {
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<Complex> x(n, 0.0);
      x[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < n; ++c) {
          if (c == k) continue;
          Complex dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += std::conj(out.u(i, c)) * x[i];
          for (std::size_t i = 0; i < n; ++i) x[i] -= dot * out.u(i, c);
        }
      }
      double nn = 0.0;
      for (const auto& xi : x) nn += std::norm(xi);
      if (nn > 0.25) {
        nn = std::sqrt(nn);
        for (std::size_t i = 0; i < n; ++i) out.u(i, k) = x[i] / nn;
        break;
      }
    }
  }
  return out;
}

std::vector<double> singular_values(const Matrix& m) { return svd(m).values; }

}  // namespace anticonc::linalg
