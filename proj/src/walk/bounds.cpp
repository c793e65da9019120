#include "anticonc/walk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "anticonc/util/error.hpp"
#include "anticonc/util/modular.hpp"

namespace anticonc::walk {

DyadicRational loe_binomial_bound(unsigned n) {
  if (n == 0) throw Error(Errc::invalid_input, "n must be >= 1");
  DyadicRational r;
  mpz_bin_uiui(r.numerator.get_mpz_t(), n, n / 2);
  r.denom_exp = n;
  return r;
}

BoundValue theorem_bound(std::uint64_t s, std::uint64_t n_or_N) {
  if (s < 2 || n_or_N < 2) throw Error(Errc::invalid_input, "theorem bound needs s >= 2 and n >= 2");
  const double v = 141.0 * std::max(1.0 / static_cast<double>(s), 1.0 / std::sqrt(static_cast<double>(n_or_N)));
  return {v, v >= 1.0};
}

BoundValue main3_bound(std::uint64_t p, std::uint64_t s, std::uint64_t n) {
  if (!modular::is_prime(p)) throw Error(Errc::invalid_input, "p must be prime");
  if (s < 2 || n < 2) throw Error(Errc::invalid_input, "main3 bound needs s >= 2 and n >= 2");
  const double v = 2.0 / static_cast<double>(p) + 120.0 / static_cast<double>(s) +
                   19.0 / std::sqrt(static_cast<double>(n));
  return {v, v >= 1.0};
}

Example2Result example2_check(std::span<const std::int64_t> a, std::optional<std::int64_t> k_bound) {
  if (a.empty()) throw Error(Errc::invalid_input, "need at least one integer");
  std::int64_t max_abs = 0;
  for (std::int64_t v : a) {
    if (v == 0) throw Error(Errc::invalid_input, "entries must be non-zero");
    max_abs = std::max<std::int64_t>(max_abs, std::llabs(v));
  }
  const std::int64_t K = k_bound.value_or(max_abs);
  if (K < max_abs) throw Error(Errc::invalid_input, "K is smaller than max |a_i|");
  const auto n = static_cast<std::int64_t>(a.size());
  if (n * K > 50'000'000) throw Error(Errc::invalid_input, "n * K too large for the dense convolution");

  const std::int64_t offset = n * K;
  std::vector<mpz_class> counts(static_cast<std::size_t>(2 * offset + 1));
  std::vector<mpz_class> next(counts.size());
  counts[static_cast<std::size_t>(offset)] = 1;
  std::int64_t lo = offset, hi = offset;  // current support window
  for (std::int64_t v : a) {
    const std::int64_t m = std::llabs(v);
    for (std::int64_t x = lo - m; x <= hi + m; ++x) next[static_cast<std::size_t>(x)] = 0;
    for (std::int64_t x = lo; x <= hi; ++x) {
      const auto& c = counts[static_cast<std::size_t>(x)];
      if (c == 0) continue;
      next[static_cast<std::size_t>(x + m)] += c;
      next[static_cast<std::size_t>(x - m)] += c;
    }
    for (std::int64_t x = lo; x <= hi; ++x) counts[static_cast<std::size_t>(x)] = 0;
    lo -= m;
    hi += m;
    for (std::int64_t x = lo; x <= hi; ++x) counts[static_cast<std::size_t>(x)].swap(next[static_cast<std::size_t>(x)]);
  }

  Example2Result r;
  r.n = static_cast<unsigned>(n);
  r.k_bound = K;
  r.max_count = 0;
  for (std::int64_t x = lo; x <= hi; ++x) {
    const auto& c = counts[static_cast<std::size_t>(x)];
    const int order = cmp(c, r.max_count);
    if (order > 0) {
      r.max_count = c;
      r.maximizers.assign(1, x - offset);
    } else if (order == 0 && c != 0) {
      r.maximizers.push_back(x - offset);
    }
  }
  r.rho = DyadicRational{r.max_count, r.n}.to_double();
  r.lower_bound = 1.0 / (4.0 * static_cast<double>(K) * std::sqrt(static_cast<double>(n)));
  // count / 2^n >= 1 / (4 K sqrt(n))  <=>  16 K^2 n count^2 >= 4^n
  mpz_class lhs = r.max_count * r.max_count;
  lhs *= mpz_class(std::to_string(16 * K * K * n));
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 4, r.n);
  r.pass = lhs >= rhs;
  return r;
}

}  // namespace anticonc::walk
