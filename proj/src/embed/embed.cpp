#include "anticonc/embed/embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "anticonc/util/error.hpp"
#include "anticonc/util/modular.hpp"

namespace anticonc::embed {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kImageOrderCap = 10'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

mpq_class determinant_of(std::size_t m, std::vector<mpq_class> a) {
  mpq_class det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && a[piv * m + c] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < m; ++k) std::swap(a[piv * m + k], a[c * m + k]);
      det = -det;
    }
    det *= a[c * m + c];
    for (std::size_t r = c + 1; r < m; ++r) {
      if (a[r * m + c] == 0) continue;
      const mpq_class f = a[r * m + c] / a[c * m + c];
      for (std::size_t k = c; k < m; ++k) a[r * m + k] -= f * a[c * m + k];
    }
  }
  return det;
}

RationalMatrix power(const RationalMatrix& a, std::uint64_t e, std::uint64_t& mults) {
  RationalMatrix result = RationalMatrix::identity(a.size());
  RationalMatrix base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1U) {
      result = first ? base : result * base;
      if (!first) ++mults;
      first = false;
    }
    e >>= 1U;
    if (e > 0) {
      base = base * base;
      ++mults;
    }
  }
  return result;
}

std::uint64_t euler_phi(std::uint64_t d) {
  std::uint64_t phi = d;
  for (std::uint64_t q : modular::distinct_prime_factors(d)) phi = phi / q * (q - 1);
  return phi;
}

/// Pollard-rho with Brent's cycle detection; returns a non-trivial factor
/// or 0 when the budget runs out.
mpz_class rho_factor(const mpz_class& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        budget = budget > steps ? budget - steps : 0;
        g = gcd(q, n);
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace

RationalMatrix::RationalMatrix(std::vector<std::vector<mpq_class>> rows) {
  m_ = rows.size();
  if (m_ == 0) throw Error(Errc::invalid_input, "matrix must be non-empty");
  for (auto& row : rows) {
    if (row.size() != m_) throw Error(Errc::invalid_input, "matrix must be square");
    for (auto& x : row) {
      x.canonicalize();
      a_.push_back(x);
    }
  }
  det_ = determinant_of(m_, a_);
  if (det_ == 0) throw Error(Errc::not_invertible, "matrix has zero determinant");
}

RationalMatrix::RationalMatrix(std::size_t m, std::vector<mpq_class> a, mpq_class det)
    : m_(m), a_(std::move(a)), det_(std::move(det)) {}

RationalMatrix RationalMatrix::identity(std::size_t m) {
  std::vector<mpq_class> a(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) a[i * m + i] = 1;
  return RationalMatrix(m, std::move(a), 1);
}

bool RationalMatrix::is_identity() const {
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (m_ != rhs.m_) throw Error(Errc::invalid_input, "matrix size mismatch");
  std::vector<mpq_class> out(m_ * m_, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t k = 0; k < m_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < m_; ++j) out[i * m_ + j] += (*this)(i, k) * rhs(k, j);
    }
  }
  return RationalMatrix(m_, std::move(out), det_ * rhs.det_);
}

mpz_class RationalMatrix::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& x : a_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

std::uint64_t finite_order_bound(std::size_t m) {
  std::uint64_t l = 1;
  // phi(d) >= sqrt(d / 2), so phi(d) <= m forces d <= 2 m^2.
  for (std::uint64_t d = 1; d <= 2 * m * m + 2; ++d) {
    if (euler_phi(d) <= m) l = modular::lcm(l, d);
  }
  return l;
}

OrderInfo rational_order(const RationalMatrix& a, std::uint64_t power_cap) {
  OrderInfo info;
  const std::uint64_t bound = finite_order_bound(a.size());
  std::uint64_t mults = 0;
  if (!power(a, bound, mults).is_identity()) return info;
  std::uint64_t t = bound;
  for (std::uint64_t q : modular::distinct_prime_factors(bound)) {
    while (t % q == 0 && power(a, t / q, mults).is_identity()) t /= q;
  }
  if (mults > power_cap) {
    info.power_cap_hit = true;
    return info;
  }
  info.order = t;
  return info;
}

Factorization factor(const mpz_class& n_in, std::uint64_t rho_budget) {
  Factorization f;
  mpz_class n = abs(n_in);
  if (n <= 1) return f;
  std::vector<mpz_class> found;
  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      found.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  std::vector<mpz_class> work;
  if (n > 1) work.push_back(n);
  std::uint64_t budget = rho_budget;
  while (!work.empty()) {
    mpz_class x = work.back();
    work.pop_back();
    if (x == 1) continue;
    if (mpz_probab_prime_p(x.get_mpz_t(), 30) > 0) {
      found.push_back(x);
      continue;
    }
    mpz_class root;
    if (mpz_perfect_power_p(x.get_mpz_t())) {
      // split off an exact root
      for (unsigned long k = 2;; ++k) {
        if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), k)) break;
      }
      work.push_back(root);
      continue;
    }
    const mpz_class g = rho_factor(x, budget);
    if (g == 0) {
      f.cofactors.push_back(x);
      continue;
    }
    work.push_back(g);
    work.push_back(x / g);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  f.primes = std::move(found);
  std::sort(f.cofactors.begin(), f.cofactors.end());
  return f;
}

BadPrimeSet bad_prime_set(const std::vector<RationalMatrix>& matrices, std::uint64_t n, std::uint64_t power_cap) {
  if (n < 2) throw Error(Errc::invalid_input, "n must be >= 2");
  if (matrices.empty()) throw Error(Errc::invalid_input, "need at least one matrix");
  const std::size_t m = matrices.front().size();
  BadPrimeSet out;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& a = matrices[i];
    if (a.size() != m) throw Error(Errc::invalid_input, "matrices must share one size");
    if (a.is_identity()) throw Error(Errc::not_non_trivial, "input A" + std::to_string(i + 1) + " is the identity");
    const std::string tag = "A" + std::to_string(i + 1);
    out.obstructions.emplace_back("denominator of " + tag, a.denominator_lcm());
    out.obstructions.emplace_back("det numerator of " + tag, mpz_class(a.determinant().get_num()));
    out.obstructions.emplace_back("det denominator of " + tag, mpz_class(a.determinant().get_den()));

    const OrderInfo info = rational_order(a, power_cap);
    out.orders.push_back(info);
    const std::uint64_t d = info.order ? *info.order : n;
    out.d.push_back(d);
    RationalMatrix f = a;
    for (std::uint64_t j = 1; j + 1 <= d; ++j) {
      mpq_class g = 0;
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          const mpq_class v = k == l ? mpq_class(f(k, l) - 1) : f(k, l);
          g += v * v;
        }
      }
      const mpz_class den = f.denominator_lcm();
      const mpq_class cleared = g * mpq_class(den * den);
      if (cleared.get_den() != 1) throw Error(Errc::verification_failed, "G(i,j) did not clear to an integer");
      out.obstructions.emplace_back("G(" + std::to_string(i + 1) + "," + std::to_string(j) + ")",
                                    mpz_class(cleared.get_num()));
      if (j + 1 < d) f = f * a;
    }
  }

  std::map<mpz_class, std::vector<std::string>> primes;
  for (const auto& [label, value] : out.obstructions) {
    if (value == 0) throw Error(Errc::verification_failed, label + " vanished for a non-identity power");
    const auto fz = factor(value);
    for (const auto& p : fz.primes) primes[p].push_back(label);
    for (const auto& c : fz.cofactors) out.unfactored.emplace_back(label, c);
  }
  for (auto& [p, reasons] : primes) out.primes.push_back({p, std::move(reasons)});
  return out;
}

std::uint64_t default_p_min(std::size_t m) { return std::max<std::uint64_t>(m + 1, 5); }

group::GroupElement reduce_mod_p(const RationalMatrix& a, std::uint64_t p) {
  const std::size_t m = a.size();
  std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t den = mpz_fdiv_ui(a(i, j).get_den_mpz_t(), p);
      if (den == 0) throw Error(Errc::invalid_input, "p divides an entry denominator");
      const std::uint64_t num = mpz_fdiv_ui(a(i, j).get_num_mpz_t(), p);
      rows[i][j] = static_cast<std::int64_t>(modular::mul_mod(num, modular::inv_mod(den, p), p));
    }
  }
  return group::GroupElement::matrix(static_cast<std::uint32_t>(p), rows);
}

EmbeddingResult embed_mod_p(const std::vector<RationalMatrix>& matrices, std::uint64_t n,
                            std::optional<std::uint64_t> p_min, std::uint64_t power_cap) {
  EmbeddingResult result;
  result.bad = bad_prime_set(matrices, n, power_cap);
  const std::uint64_t start = p_min.value_or(default_p_min(matrices.front().size()));
  if (start < 2) throw Error(Errc::invalid_input, "p_min must be >= 2");

  std::uint64_t p = modular::next_prime(start);
  for (;; p = modular::next_prime(p + 1)) {
    if (p > kPrimeSearchBound) throw Error(Errc::prime_search_exhausted, "no admissible prime below 1e9");
    const auto hit = std::find_if(result.bad.obstructions.begin(), result.bad.obstructions.end(), [&](const auto& o) {
      return mpz_divisible_ui_p(o.second.get_mpz_t(), p) != 0;
    });
    if (hit == result.bad.obstructions.end()) break;
    result.skipped.emplace_back(p, hit->first);
  }
  result.p = p;

  for (std::size_t i = 0; i < matrices.size(); ++i) {
    auto image = reduce_mod_p(matrices[i], p);
    EmbedReport rep;
    rep.original_order = result.bad.orders[i].order;
    rep.power_cap_hit = result.bad.orders[i].power_cap_hit;
    try {
      rep.image_order = group::raw_order(image, kImageOrderCap);
    } catch (const Error& e) {
      if (e.code() != Errc::cap_exceeded) throw;
    }
    if (rep.original_order) {
      rep.clause = "i";
      rep.satisfied = rep.image_order && *rep.image_order == *rep.original_order;
    } else {
      rep.clause = "ii";
      rep.satisfied = rep.image_order ? *rep.image_order >= n : n <= kImageOrderCap;
    }
    if (!rep.satisfied) {
      throw Error(Errc::verification_failed, "order clause failed for A" + std::to_string(i + 1) + " at p = " + std::to_string(p));
    }
    result.images.push_back(std::move(image));
    result.reports.push_back(rep);
  }
  return result;
}

}  // namespace anticonc::embed
