#pragma once

// Dense complex matrices, row-major.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace anticonc::linalg {

using Complex = std::complex<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Complex>& d);
  /// Rows given as nested lists; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Complex* data() noexcept { return data_.data(); }
  const Complex* data() const noexcept { return data_.data(); }

  Matrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(Complex scalar) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// ||U U* - I||_max
double unitarity_defect(const Matrix& u);

/// Entries with independent standard normal real and imaginary parts.
Matrix random_complex_gaussian(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// (G + G*) / 2 for a complex Gaussian G.
Matrix random_hermitian(std::size_t n, std::mt19937_64& rng);

/// Haar-distributed unitary: modified Gram-Schmidt QR of a complex Gaussian
/// matrix with the phases of R's diagonal moved into Q.
Matrix random_unitary(std::size_t n, std::mt19937_64& rng);

}  // namespace anticonc::linalg
