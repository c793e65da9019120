#include "anticonc/charrep/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "anticonc/group/group_io.hpp"
#include "anticonc/util/error.hpp"
#include "anticonc/util/modular.hpp"

namespace anticonc::charrep {

using modular::inv_mod;
using modular::mul_mod;
using modular::pow_mod;

std::vector<std::uint32_t> CharacterTable::central_classes() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < class_sizes.size(); ++c) {
    if (class_sizes[c] == 1) out.push_back(c);
  }
  return out;
}

namespace {

CharacterTable skeleton_from(const FiniteGroup& group, const group::ConjugacyClasses& classes) {
  CharacterTable t;
  t.group_order = group.order();
  t.representatives = classes.representatives;
  t.class_sizes = classes.sizes;
  t.class_of = classes.class_of;
  t.exponent = 1;
  for (ElementIndex rep : t.representatives) {
    const std::uint64_t o = group::element_order(group, rep);
    t.class_orders.push_back(o);
    t.exponent = modular::lcm(t.exponent, o);
  }
  for (ElementIndex rep : t.representatives) t.inverse_class.push_back(t.class_of[group.inverse(rep)]);
  return t;
}

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

struct Field {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p); }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, p); }
};

/// Row-reduces in place; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Mat& rows, const Field& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint64_t inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t u = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(u, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of {x : A x = 0}, as row vectors.
Mat nullspace(Mat a, const Field& f) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  const auto pivots = rref(a, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Characteristic polynomial (coefficients low to high) via reduction to
/// upper Hessenberg form.
Vec charpoly(Mat h, const Field& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const std::uint64_t t_inv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      const std::uint64_t u = f.mul(h[r][m - 1], t_inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(u, h[m][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][m] = f.add(h[c][m], f.mul(u, h[c][r]));
    }
  }
  // p_m = (X - h_mm) p_{m-1} - sum_i (prod_{j} h_{j,j-1}) h_{m-i,m} p_{m-i-1}   (1-based)
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  auto H = [&](std::size_t i, std::size_t j) { return h[i - 1][j - 1]; };
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      next[k + 1] = f.add(next[k + 1], p[m - 1][k]);
      next[k] = f.sub(next[k], f.mul(H(m, m), p[m - 1][k]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, H(m - i + 1, m - i));
      const std::uint64_t coef = f.mul(t, H(m - i, m));
      if (coef == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) next[k] = f.sub(next[k], f.mul(coef, p[m - i - 1][k]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<std::uint64_t> roots(const Vec& poly, const Field& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = f.add(f.mul(acc, x), poly[k]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

std::uint64_t choose_prime(std::uint64_t exponent, std::size_t order) {
  const double lower = 2.0 * std::sqrt(static_cast<double>(order));
  for (std::uint64_t l = exponent + 1; l < (1ULL << 32); l += exponent) {
    if (static_cast<double>(l) > lower && modular::is_prime(l)) return l;
  }
  throw Error(Errc::no_suitable_prime, "no prime l = 1 (mod exponent) below 2^32");
}

/// Class matrix A_j with (A_j)_{k,l} = #{x in C_j : x^{-1} g_l in C_k}, mod l.
Mat class_matrix(const FiniteGroup& group, const group::ConjugacyClasses& classes, std::size_t j, const Field& f) {
  const std::size_t r = classes.count();
  Mat a(r, Vec(r, 0));
  for (ElementIndex x : classes.members_of(j)) {
    const ElementIndex xi = group.inverse(x);
    for (std::size_t l = 0; l < r; ++l) {
      const auto k = classes.class_of[group.multiply(xi, classes.representatives[l])];
      ++a[k][l];
    }
  }
  for (auto& row : a) {
    for (auto& v : row) v %= f.p;
  }
  return a;
}

}  // namespace

CharacterTable class_skeleton(const FiniteGroup& group) { return skeleton_from(group, group::conjugacy_classes(group)); }

CharacterTable character_table_dixon(const FiniteGroup& group) {
  const auto classes = group::conjugacy_classes(group);
  const std::size_t r = classes.count();
  if (r > kMaxClasses) {
    throw Error(Errc::too_many_classes, std::to_string(r) + " classes exceed the limit of " + std::to_string(kMaxClasses));
  }
  CharacterTable table = skeleton_from(group, classes);
  const std::uint64_t order = group.order();
  const Field f{choose_prime(table.exponent, group.order())};

  // Split F_l^r into common eigenspaces of the class matrices.
  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    const Mat a = class_matrix(group, classes, j, f);
    std::vector<Mat> next;
    for (auto& basis : spaces) {
      const std::size_t k = basis.size();
      if (k == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<std::size_t> pivots;
      for (const auto& row : basis) {
        pivots.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto v) { return v != 0; }) - row.begin()));
      }
      Mat restricted(k, Vec(k, 0));
      for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
          std::uint64_t acc = 0;
          const auto& arow = a[pivots[i]];
          for (std::size_t l = 0; l < r; ++l) {
            if (basis[t][l] != 0) acc = f.add(acc, f.mul(arow[l], basis[t][l]));
          }
          restricted[i][t] = acc;
        }
      }
      const auto eig = roots(charpoly(restricted, f), f);
      if (eig.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::size_t total = 0;
      for (std::uint64_t lambda : eig) {
        Mat shifted = restricted;
        for (std::size_t i = 0; i < k; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        Mat coords = nullspace(std::move(shifted), f);
        Mat sub;
        for (const auto& c : coords) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < k; ++t) {
            if (c[t] == 0) continue;
            for (std::size_t l = 0; l < r; ++l) v[l] = f.add(v[l], f.mul(c[t], basis[t][l]));
          }
          sub.push_back(std::move(v));
        }
        rref(sub, f);
        total += sub.size();
        next.push_back(std::move(sub));
      }
      if (total != k) throw Error(Errc::split_failure, "class matrix not diagonalizable mod l");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(Errc::split_failure, "class matrices did not separate all characters");

  // Power maps: class of g^j for each class representative.
  std::vector<std::vector<std::uint32_t>> power_class(r);
  for (std::size_t c = 0; c < r; ++c) {
    ElementIndex x = FiniteGroup::identity();
    for (std::uint64_t j = 0; j < table.class_orders[c]; ++j) {
      power_class[c].push_back(classes.class_of[x]);
      x = group.multiply(x, classes.representatives[c]);
    }
  }

  const std::uint64_t z = pow_mod(modular::primitive_root(f.p), (f.p - 1) / table.exponent, f.p);
  const auto sqrt_order = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;

  struct Row {
    std::uint64_t degree;
    Vec modular;
    std::vector<Complex> values;
  };
  std::vector<Row> rows;
  for (const auto& space : spaces) {
    Vec omega = space.front();
    if (omega[0] == 0) throw Error(Errc::split_failure, "eigenvector vanishes at the identity class");
    const std::uint64_t scale = f.inv(omega[0]);
    for (auto& w : omega) w = f.mul(w, scale);

    std::uint64_t s = 0;
    for (std::size_t l = 0; l < r; ++l) {
      s = f.add(s, f.mul(f.mul(omega[l], omega[table.inverse_class[l]]), f.inv(table.class_sizes[l] % f.p)));
    }
    if (s == 0) throw Error(Errc::split_failure, "degenerate norm mod l");
    const std::uint64_t target = f.mul(order % f.p, f.inv(s));
    std::optional<std::uint64_t> degree;
    for (std::uint64_t d = 1; d <= sqrt_order && d * d <= order; ++d) {
      if (f.mul(d, d) == target) {
        degree = d;
        break;
      }
    }
    if (!degree) throw Error(Errc::split_failure, "no admissible degree for a character");

    Vec chi(r);
    for (std::size_t l = 0; l < r; ++l) chi[l] = f.mul(f.mul(*degree, omega[l]), f.inv(table.class_sizes[l] % f.p));

    std::vector<Complex> values(r);
    for (std::size_t l = 0; l < r; ++l) {
      const std::uint64_t o = table.class_orders[l];
      const std::uint64_t zo = pow_mod(z, table.exponent / o, f.p);
      const std::uint64_t zo_inv = f.inv(zo);
      const std::uint64_t o_inv = f.inv(o % f.p);
      Complex value = 0.0;
      std::uint64_t total = 0;
      for (std::uint64_t k = 0; k < o; ++k) {
        // m_k = (1/o) sum_j chi(g^j) zo^{-jk}
        const std::uint64_t step = pow_mod(zo_inv, k, f.p);
        std::uint64_t acc = 0;
        std::uint64_t w = 1;
        for (std::uint64_t j = 0; j < o; ++j) {
          acc = f.add(acc, f.mul(chi[power_class[l][j]], w));
          w = f.mul(w, step);
        }
        const std::uint64_t m = f.mul(acc, o_inv);
        if (m > *degree) throw Error(Errc::non_integral_multiplicity, "eigenvalue multiplicity exceeds the degree");
        total += m;
        if (m != 0) value += static_cast<double>(m) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(o));
      }
      if (total != *degree) throw Error(Errc::non_integral_multiplicity, "multiplicities do not sum to the degree");
      values[l] = value;
    }
    rows.push_back({*degree, omega, std::move(values)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.modular < b.modular;
  });
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.values.push_back(std::move(row.values));
  }

  const auto report = check_orthogonality(table);
  if (report.row_defect > 1e-8 || report.degree_square_sum != order) {
    throw Error(Errc::split_failure, "character table failed the orthogonality check");
  }
  return table;
}

Complex class_inner_product(const CharacterTable& table, const std::vector<Complex>& chi,
                            const std::vector<Complex>& psi) {
  Complex acc = 0.0;
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    acc += static_cast<double>(table.class_sizes[c]) * chi[c] * std::conj(psi[c]);
  }
  return acc / static_cast<double>(table.group_order);
}

OrthogonalityReport check_orthogonality(const CharacterTable& table) {
  OrthogonalityReport rep;
  const std::size_t r = table.values.size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Complex ip = class_inner_product(table, table.values[i], table.values[j]);
      rep.row_defect = std::max(rep.row_defect, std::abs(ip - Complex(i == j ? 1.0 : 0.0)));
    }
    const double d = table.values[i][0].real();
    rep.degree_rounding = std::max(rep.degree_rounding, std::abs(table.values[i][0] - Complex(std::round(d))));
    const auto rounded = static_cast<std::uint64_t>(std::llround(d));
    rep.degree_square_sum += rounded * rounded;
  }
  const std::size_t k = table.class_count();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < r; ++i) acc += table.values[i][a] * std::conj(table.values[i][b]);
      const double expect = a == b ? static_cast<double>(table.group_order) / static_cast<double>(table.class_sizes[a]) : 0.0;
      rep.column_defect = std::max(rep.column_defect, std::abs(acc - Complex(expect)));
    }
  }
  return rep;
}

nlohmann::json character_table_to_json(const FiniteGroup& group, const CharacterTable& table) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < table.class_count(); ++c) {
    classes.push_back({{"representative", group::encoding_to_json(group.words(table.representatives[c]))},
                       {"representative_index", table.representatives[c]},
                       {"size", table.class_sizes[c]},
                       {"order", table.class_orders[c]}});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : table.values[i]) vals.push_back({v.real(), v.imag()});
    chars.push_back({{"degree", table.degrees[i]}, {"values", vals}});
  }
  return {{"group_order", table.group_order}, {"exponent", table.exponent}, {"classes", classes},
          {"characters", chars}};
}

}  // namespace anticonc::charrep
