#include "anticonc/charrep/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "anticonc/util/error.hpp"

namespace anticonc::charrep {

using linalg::Matrix;

namespace {

void check_complete(const FiniteGroup& group, const std::vector<UnitaryIrrep>& irreps) {
  if (dimension_square_sum(irreps) != group.order()) {
    throw Error(Errc::incomplete_irreps, "sum of dim^2 does not equal |G|");
  }
}

void check_sequence(const FiniteGroup& group, std::span<const ElementIndex> sequence) {
  for (ElementIndex a : sequence) {
    if (a >= group.order()) throw Error(Errc::not_in_group, "sequence element index out of range");
  }
}

/// tr(M Phi(B^{-1})) for the given B.
Complex trace_against(const Matrix& m, const UnitaryIrrep& irrep, ElementIndex b_inv) {
  const std::size_t d = irrep.dim;
  const Complex* phi = irrep.block(b_inv);
  Complex t = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t c = 0; c < d; ++c) t += m(a, c) * phi[c * d + a];
  }
  return t;
}

double real_checked(Complex z) {
  if (std::abs(z.imag()) > kMaxImaginary) {
    throw Error(Errc::imag_too_large, "trace identity has imaginary part " + std::to_string(z.imag()));
  }
  return z.real();
}

}  // namespace

Matrix averaged_product(const FiniteGroup& group, const UnitaryIrrep& irrep, std::span<const ElementIndex> sequence) {
  Matrix m = Matrix::identity(irrep.dim);
  for (ElementIndex a : sequence) {
    const Matrix b = (irrep.matrix(a) + irrep.matrix(group.inverse(a))) * Complex(0.5);
    m = m * b;
  }
  return m;
}

double fourier_probability(const FiniteGroup& group, const std::vector<UnitaryIrrep>& irreps,
                           std::span<const ElementIndex> sequence, ElementIndex b) {
  check_complete(group, irreps);
  check_sequence(group, sequence);
  if (b >= group.order()) throw Error(Errc::not_in_group, "B index out of range");
  const ElementIndex b_inv = group.inverse(b);
  Complex total = 0.0;
  for (const auto& irrep : irreps) {
    total += static_cast<double>(irrep.dim) * trace_against(averaged_product(group, irrep, sequence), irrep, b_inv);
  }
  return real_checked(total / static_cast<double>(group.order()));
}

std::vector<double> fourier_distribution(const FiniteGroup& group, const std::vector<UnitaryIrrep>& irreps,
                                         std::span<const ElementIndex> sequence, unsigned threads) {
  check_complete(group, irreps);
  check_sequence(group, sequence);
  const std::size_t n = group.order();
  std::vector<std::vector<Complex>> terms(irreps.size(), std::vector<Complex>(n));
  auto work = [&](std::size_t r) {
    const auto& irrep = irreps[r];
    const Matrix m = averaged_product(group, irrep, sequence);
    for (ElementIndex b = 0; b < n; ++b) {
      terms[r][b] = static_cast<double>(irrep.dim) * trace_against(m, irrep, group.inverse(b));
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(irreps.size())));
  if (workers == 1) {
    for (std::size_t r = 0; r < irreps.size(); ++r) work(r);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < irreps.size(); r += workers) work(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<double> out(n);
  for (ElementIndex b = 0; b < n; ++b) {
    Complex total = 0.0;
    for (const auto& t : terms) total += t[b];
    out[b] = real_checked(total / static_cast<double>(n));
  }
  return out;
}

}  // namespace anticonc::charrep
