#pragma once

// Closed-form anti-concentration bounds and the integer signed-sum check.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "anticonc/walk/exact.hpp"

namespace anticonc::walk {

/// C(n, floor(n/2)) / 2^n, exactly.
DyadicRational loe_binomial_bound(unsigned n);

struct BoundValue {
  double value = 0.0;
  bool vacuous = false;  // value >= 1, so no information about a probability
};

/// 141 * max(1/s, 1/sqrt(n_or_N)); requires s >= 2 and n_or_N >= 2.
BoundValue theorem_bound(std::uint64_t s, std::uint64_t n_or_N);

/// 2/p + 120/s + 19/sqrt(n); requires p prime and s, n >= 2.
BoundValue main3_bound(std::uint64_t p, std::uint64_t s, std::uint64_t n);

struct Example2Result {
  unsigned n = 0;
  std::int64_t k_bound = 0;        // K
  mpz_class max_count;             // over denominator 2^n
  std::vector<std::int64_t> maximizers;  // values b of the signed sum attaining the max
  double rho = 0.0;
  double lower_bound = 0.0;        // 1 / (4 K sqrt(n))
  bool pass = false;               // rho >= lower_bound, decided in exact arithmetic
};

/// Exact max point probability of S = sum of ±a_i via 1-D convolution on
/// [-nK, nK]. K defaults to max |a_i|; every a_i must be non-zero.
Example2Result example2_check(std::span<const std::int64_t> a, std::optional<std::int64_t> k_bound = {});

}  // namespace anticonc::walk
