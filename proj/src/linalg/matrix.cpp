#include "anticonc/linalg/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "anticonc/util/error.hpp"

namespace anticonc::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Complex>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::invalid_input, "ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.data() + i * c);
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix a(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
  }
  return a;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::invalid_input, "matrix size mismatch in product");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex* orow = out.data() + i * rhs.cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex(0.0)) continue;
      const Complex* brow = rhs.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += a * brow[j];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::invalid_input, "matrix size mismatch in sum");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(Errc::invalid_input, "matrix size mismatch in difference");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

Matrix Matrix::operator*(Complex scalar) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= scalar;
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

double unitarity_defect(const Matrix& u) {
  if (!u.square()) throw Error(Errc::invalid_input, "unitarity needs a square matrix");
  return max_abs_diff(u * u.adjoint(), Matrix::identity(u.rows()));
}

Matrix random_complex_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const Matrix g = random_complex_gaussian(n, n, rng);
  return (g + g.adjoint()) * Complex(0.5);
}

Matrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  Matrix q = random_complex_gaussian(n, n, rng);
  for (std::size_t k = 0; k < n; ++k) {
    // two Gram-Schmidt passes keep the columns orthonormal to rounding
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < n; ++i) q(i, k) -= dot * q(i, j);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    // R's diagonal is this positive norm, so no further phase fix is needed
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= norm;
  }
  return q;
}

}  // namespace anticonc::linalg
