#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "anticonc/charrep/irreps.hpp"
#include "anticonc/group/catalog.hpp"
#include "anticonc/linalg/decompositions.hpp"
#include "anticonc/spectral/diagnostics.hpp"
#include "anticonc/spectral/properties.hpp"
#include "anticonc/spectral/spectral.hpp"
#include "anticonc/util/error.hpp"

using namespace anticonc;
using linalg::Complex;
using linalg::Matrix;

namespace {

constexpr double kPi = 3.141592653589793;

std::vector<double> eigen_singular_values(const Matrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace

TEST_CASE("singular values against Eigen") {
  std::mt19937_64 rng(17);
  for (std::size_t d = 1; d <= 20; ++d) {
    const auto m = linalg::random_complex_gaussian(d, d, rng);
    const auto ours = spectral::singular_values(m).values;
    const auto ref = eigen_singular_values(m);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t k = 0; k < d; ++k) CHECK(ours[k] == doctest::Approx(ref[k]).epsilon(1e-10));
  }
}

TEST_CASE("singular value examples") {
  const auto s = spectral::singular_values(Matrix::diagonal({Complex(3), Complex(4)})).values;
  CHECK(s[0] == doctest::Approx(4.0));
  CHECK(s[1] == doctest::Approx(3.0));
  std::mt19937_64 rng(4);
  for (double v : spectral::singular_values(linalg::random_unitary(7, rng)).values) CHECK(std::abs(v - 1.0) < 1e-10);
  Matrix outer(4, 4);
  const double h = 0.5;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) outer(i, j) = h * h;
  }
  const auto so = spectral::singular_values(outer).values;
  CHECK(so[0] == doctest::Approx(1.0));
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(so[k]) < 1e-12);
}

TEST_CASE("hermitian eigen reconstructs") {
  std::mt19937_64 rng(9);
  const auto h = linalg::random_hermitian(12, rng);
  const auto e = linalg::hermitian_eigen(h);
  std::vector<Complex> d(e.values.begin(), e.values.end());
  const auto back = e.vectors * Matrix::diagonal(d) * e.vectors.adjoint();
  CHECK(linalg::max_abs_diff(back, h) < 1e-10);
  CHECK(linalg::unitarity_defect(e.vectors) < 1e-10);
}

TEST_CASE("trace and product inequalities") {
  const auto t = spectral::verify_trace_bound(Matrix::identity(5));
  CHECK(t.abs_trace == doctest::Approx(5.0));
  CHECK(t.singular_sum == doctest::Approx(5.0));
  CHECK(t.pass);
  Matrix jordan(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) jordan(i, i + 1) = 1.0;
  CHECK(spectral::verify_trace_bound(jordan).pass);

  std::mt19937_64 rng(23);
  const auto m = linalg::random_complex_gaussian(6, 6, rng);
  const auto eq = spectral::verify_product_bounds(m, Matrix::identity(6));
  CHECK(eq.pass());
  CHECK(eq.worst_product_ratio == doctest::Approx(1.0));
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng() % 19);
    CHECK(spectral::verify_product_bounds(linalg::random_complex_gaussian(d, d, rng), linalg::random_complex_gaussian(d, d, rng)).pass());
  }
}

TEST_CASE("cos spectrum") {
  const auto a = spectral::cos_spectrum(Matrix::diagonal({Complex(0, 1), Complex(0, -1)}));
  CHECK(a.abs_real_eigenvalues[0] < 1e-12);
  CHECK(a.singular_values[0] < 1e-12);
  const auto b = spectral::cos_spectrum(Matrix::diagonal({Complex(1), std::polar(1.0, kPi / 3)}));
  CHECK(b.abs_real_eigenvalues[0] == doctest::Approx(1.0));
  CHECK(b.abs_real_eigenvalues[1] == doctest::Approx(0.5));
  CHECK(b.pass);
  std::mt19937_64 rng(31);
  for (std::size_t d = 2; d <= 16; ++d) CHECK(spectral::cos_spectrum(linalg::random_unitary(d, rng)).pass);
  try {
    spectral::cos_spectrum(Matrix::diagonal({Complex(2), Complex(1)}));
    FAIL("non-unitary accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_unitary);
  }
}

TEST_CASE("trigonometric grid") {
  const auto t = spectral::trig_bounds(1e-3);
  CHECK(t.pass);
  CHECK(t.sin_violation <= 1e-12);
  CHECK(t.cos_violation <= 1e-12);
  CHECK(t.chain_violation <= 1e-12);
  CHECK(spectral::folded_angle(0, 4) == doctest::Approx(0.0));
  CHECK(spectral::folded_angle(1, 4) == doctest::Approx(kPi / 2));
  CHECK(spectral::folded_angle(2, 4) == doctest::Approx(0.0));
}

TEST_CASE("proof diagnostics") {
  const auto g = group::FiniteGroup::close(group::catalog::sl2(5));
  const auto irreps = charrep::decompose_regular(g);
  const auto it = std::find_if(irreps.begin(), irreps.end(), [](const auto& r) { return r.dim == 5; });
  REQUIRE(it != irreps.end());

  std::mt19937_64 rng(12);
  std::vector<group::ElementIndex> seq(10);
  for (auto& x : seq) x = static_cast<group::ElementIndex>(1 + rng() % 119);
  const auto dg = spectral::proof_diagnostics(g, 5, 2, 2, *it, seq, 0);
  CHECK(dg.rows.size() == 5);
  CHECK(dg.for_s6_all_hold);
  CHECK(dg.l0 == 300);
  CHECK(dg.cascade_vacuous);

  // order-2 elements give unitary B_i with all singular values 1
  std::vector<group::ElementIndex> invol;
  for (group::ElementIndex i = 1; i < g.order(); ++i) {
    if (group::element_order(g, i) == 2) invol.push_back(i);
  }
  REQUIRE(!invol.empty());
  const auto d2 = spectral::proof_diagnostics(g, 5, 2, 2, *it, std::vector(3, invol[0]), 0);
  for (const auto& r : d2.rows) CHECK(r.for_s6_log_rhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d2.max_b_singular == doctest::Approx(1.0));
}

TEST_CASE("property suites, reduced draws") {
  spectral::PropertySuiteConfig cfg;
  cfg.pairs = 100;
  cfg.unitaries_per_size = 10;
  cfg.grid_step = 1e-3;
  CHECK(spectral::run_property_suites(cfg).pass());
}
