#pragma once

// 64-bit modular arithmetic and small-prime utilities shared by the group,
// character-table and embedding code.

#include <cstdint>
#include <vector>

namespace anticonc::modular {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; a must be coprime to m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

/// Distinct prime factors by trial division (adequate for n < 2^40 or so).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// A generator of the multiplicative group of the prime field F_p.
std::uint64_t primitive_root(std::uint64_t p);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Smallest quadratic non-residue modulo an odd prime p.
std::uint64_t quadratic_non_residue(std::uint64_t p);

}  // namespace anticonc::modular
