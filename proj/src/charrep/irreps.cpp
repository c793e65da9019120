#include "anticonc/charrep/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "anticonc/linalg/decompositions.hpp"
#include "anticonc/util/error.hpp"

namespace anticonc::charrep {

using linalg::Matrix;

linalg::Matrix UnitaryIrrep::matrix(ElementIndex g) const {
  Matrix m(dim, dim);
  std::copy(block(g), block(g) + dim * dim, m.data());
  return m;
}

std::uint64_t dimension_square_sum(const std::vector<UnitaryIrrep>& irreps) {
  std::uint64_t s = 0;
  for (const auto& r : irreps) s += r.dim * r.dim;
  return s;
}

namespace {

struct Piece {
  Matrix q;  // n x m, orthonormal columns spanning an invariant subspace
  std::vector<Complex> character;
};

class Splitter {
 public:
  Splitter(const FiniteGroup& group, std::uint64_t seed, double tol)
      : group_(group), n_(group.order()), tol_(tol), rng_(seed), left_inv_(n_ * n_) {
    for (ElementIndex g = 0; g < n_; ++g) {
      const ElementIndex gi = group.inverse(g);
      for (ElementIndex k = 0; k < n_; ++k) left_inv_[g * n_ + k] = group.multiply(gi, k);
    }
  }

  std::vector<Piece> run() {
    for (int attempt = 0; attempt < kMaxSplitRetries; ++attempt) {
      const auto eig = linalg::hermitian_eigen(averaged_regular());
      const auto clusters = cluster(eig.values);
      if (clusters.size() == 1 && n_ > 1) continue;
      std::vector<Piece> pieces;
      for (const auto& [begin, end] : clusters) split(columns(eig.vectors, begin, end), pieces);
      return pieces;
    }
    throw Error(Errc::split_failure, "regular representation did not split after retries");
  }

  std::vector<Complex> character_of(const Matrix& q) const {
    std::vector<Complex> chi(n_);
    const std::size_t m = q.cols();
    for (ElementIndex g = 0; g < n_; ++g) {
      const ElementIndex* li = left_inv_.data() + static_cast<std::size_t>(g) * n_;
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n_; ++k) {
        const Complex* a = q.data() + k * m;
        const Complex* b = q.data() + static_cast<std::size_t>(li[k]) * m;
        for (std::size_t j = 0; j < m; ++j) acc += std::conj(a[j]) * b[j];
      }
      chi[g] = acc;
    }
    return chi;
  }

  /// Phi(g) = Q* R(g) Q with (R(g) Q)_{k,j} = Q_{g^{-1} k, j}.
  std::vector<Complex> rep_matrices(const Matrix& q) const {
    const std::size_t m = q.cols();
    std::vector<Complex> out(n_ * m * m);
    for (ElementIndex g = 0; g < n_; ++g) {
      const ElementIndex* li = left_inv_.data() + static_cast<std::size_t>(g) * n_;
      Complex* blk = out.data() + static_cast<std::size_t>(g) * m * m;
      for (std::size_t k = 0; k < n_; ++k) {
        const Complex* a = q.data() + k * m;
        const Complex* b = q.data() + static_cast<std::size_t>(li[k]) * m;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex ai = std::conj(a[i]);
          if (ai == Complex(0.0)) continue;
          for (std::size_t j = 0; j < m; ++j) blk[i * m + j] += ai * b[j];
        }
      }
    }
    return out;
  }

  double irreducibility(const std::vector<Complex>& chi) const {
    double s = 0.0;
    for (const auto& c : chi) s += std::norm(c);
    return s / static_cast<double>(n_);
  }

 private:
  /// H~_{a,b} = f(a^{-1} b) with f(x) = (1/n) sum_c H_{c, c x}: the average of
  /// R(g) H R(g)^{-1} over G for a random Hermitian H.
  Matrix averaged_regular() {
    const Matrix h = linalg::random_hermitian(n_, rng_);
    std::vector<Complex> f(n_, 0.0);
    for (ElementIndex c = 0; c < n_; ++c) {
      for (ElementIndex x = 0; x < n_; ++x) f[x] += h(c, group_.multiply(c, x));
    }
    for (auto& v : f) v /= static_cast<double>(n_);
    Matrix out(n_, n_);
    for (ElementIndex a = 0; a < n_; ++a) {
      const ElementIndex* li = left_inv_.data() + static_cast<std::size_t>(a) * n_;
      for (ElementIndex b = 0; b < n_; ++b) out(a, b) = f[li[b]];
    }
    // symmetrize away rounding
    return (out + out.adjoint()) * Complex(0.5);
  }

  static std::vector<std::pair<std::size_t, std::size_t>> cluster(const std::vector<double>& values) {
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double gap = 1e-6 * scale;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t begin = 0;
    for (std::size_t k = 1; k <= values.size(); ++k) {
      if (k == values.size() || values[k] - values[k - 1] > gap) {
        out.emplace_back(begin, k);
        begin = k;
      }
    }
    return out;
  }

  static Matrix columns(const Matrix& v, std::size_t begin, std::size_t end) {
    Matrix q(v.rows(), end - begin);
    for (std::size_t i = 0; i < v.rows(); ++i) {
      for (std::size_t j = begin; j < end; ++j) q(i, j - begin) = v(i, j);
    }
    return q;
  }

  void split(Matrix q, std::vector<Piece>& out) {
    auto chi = character_of(q);
    if (std::abs(irreducibility(chi) - 1.0) <= tol_) {
      out.push_back({std::move(q), std::move(chi)});
      return;
    }
    const std::size_t m = q.cols();
    const auto mats = rep_matrices(q);
    for (int attempt = 0; attempt < kMaxSplitRetries; ++attempt) {
      const Matrix k = linalg::random_hermitian(m, rng_);
      Matrix avg(m, m);
      for (ElementIndex g = 0; g < n_; ++g) {
        Matrix phi(m, m);
        std::copy(mats.data() + static_cast<std::size_t>(g) * m * m, mats.data() + (static_cast<std::size_t>(g) + 1) * m * m, phi.data());
        avg = avg + phi * k * phi.adjoint();
      }
      avg = (avg + avg.adjoint()) * Complex(0.5 / static_cast<double>(n_));
      const auto eig = linalg::hermitian_eigen(avg);
      const auto clusters = cluster(eig.values);
      if (clusters.size() == 1) continue;
      for (const auto& [begin, end] : clusters) split(q * columns(eig.vectors, begin, end), out);
      return;
    }
    throw Error(Errc::split_failure, "invariant subspace did not split after retries");
  }

  const FiniteGroup& group_;
  std::size_t n_;
  double tol_;
  std::mt19937_64 rng_;
  std::vector<ElementIndex> left_inv_;
};

}  // namespace

std::vector<UnitaryIrrep> decompose_regular(const FiniteGroup& group, std::uint64_t seed, double tol) {
  const std::size_t n = group.order();
  if (n > kMaxRegularOrder) {
    throw Error(Errc::size_cap, "regular splitting needs |G| <= " + std::to_string(kMaxRegularOrder));
  }
  Splitter splitter(group, seed, tol);
  const auto pieces = splitter.run();

  std::vector<const Piece*> reps;
  for (const auto& piece : pieces) {
    bool known = false;
    for (const Piece* r : reps) {
      Complex ip = 0.0;
      for (std::size_t g = 0; g < n; ++g) ip += piece.character[g] * std::conj(r->character[g]);
      ip /= static_cast<double>(n);
      const double rounded = std::round(ip.real());
      if (std::abs(ip - Complex(rounded)) > 0.1) {
        throw Error(Errc::split_failure, "character inner product is not near an integer");
      }
      if (rounded >= 1.0) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(&piece);
  }

  std::vector<UnitaryIrrep> out;
  for (const Piece* r : reps) {
    UnitaryIrrep irrep;
    irrep.dim = r->q.cols();
    irrep.matrices = splitter.rep_matrices(r->q);
    irrep.character.resize(n);
    for (ElementIndex g = 0; g < n; ++g) {
      Complex t = 0.0;
      for (std::size_t i = 0; i < irrep.dim; ++i) t += irrep.block(g)[i * irrep.dim + i];
      irrep.character[g] = t;
    }
    out.push_back(std::move(irrep));
  }
  if (dimension_square_sum(out) != n) {
    throw Error(Errc::split_failure, "irreducible constituents found do not account for |G|");
  }
  auto key = [](const UnitaryIrrep& r) {
    std::vector<long long> k{static_cast<long long>(r.dim)};
    for (const auto& c : r.character) {
      k.push_back(std::llround(c.real() * 1e6));
      k.push_back(std::llround(c.imag() * 1e6));
    }
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const UnitaryIrrep& a, const UnitaryIrrep& b) { return key(a) < key(b); });
  return out;
}

IrrepCheck check_irrep(const FiniteGroup& group, const UnitaryIrrep& irrep, std::size_t pairs, std::uint64_t seed) {
  IrrepCheck c;
  const std::size_t n = group.order();
  for (ElementIndex g = 0; g < n; ++g) c.unitarity = std::max(c.unitarity, linalg::unitarity_defect(irrep.matrix(g)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(n - 1));
  for (std::size_t t = 0; t < pairs; ++t) {
    const ElementIndex g = pick(rng);
    const ElementIndex h = pick(rng);
    c.homomorphism = std::max(c.homomorphism, linalg::max_abs_diff(irrep.matrix(g) * irrep.matrix(h), irrep.matrix(group.multiply(g, h))));
  }
  double s = 0.0;
  for (const auto& x : irrep.character) s += std::norm(x);
  c.irreducibility = std::abs(s / static_cast<double>(n) - 1.0);
  return c;
}

}  // namespace anticonc::charrep
