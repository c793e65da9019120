#pragma once

// Order-preserving reduction of rational matrices into GL_m(p).
//
// For each input A_i and 1 <= j < d_i the polynomial
//   G(i,j) = sum_{k != l} F_kl^2 + sum_k (F_kk - 1)^2,   F = A_i^j,
// is a positive rational unless A_i^j = I. Any prime dividing an entry
// denominator, a determinant, or a cleared G(i,j) is excluded; at every
// other prime the reduction keeps A_i^j != I for j < d_i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "anticonc/group/element.hpp"

namespace anticonc::embed {

inline constexpr std::uint64_t kDefaultPowerCap = 1'000'000;
inline constexpr std::uint64_t kPrimeSearchBound = 1'000'000'000;

class RationalMatrix {
 public:
  /// Throws NotInvertible when the determinant is zero.
  explicit RationalMatrix(std::vector<std::vector<mpq_class>> rows);

  std::size_t size() const noexcept { return m_; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
  const mpq_class& determinant() const noexcept { return det_; }
  bool is_identity() const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  static RationalMatrix identity(std::size_t m);
  /// lcm of all entry denominators.
  mpz_class denominator_lcm() const;

 private:
  RationalMatrix(std::size_t m, std::vector<mpq_class> a, mpq_class det);
  std::size_t m_ = 0;
  std::vector<mpq_class> a_;
  mpq_class det_;
};

/// lcm{d : phi(d) <= m}; every finite order in GL_m(Q) divides it.
std::uint64_t finite_order_bound(std::size_t m);

struct OrderInfo {
  std::optional<std::uint64_t> order;  // empty: infinite (or undetermined)
  bool power_cap_hit = false;          // detection inconclusive, treated as infinite
};

OrderInfo rational_order(const RationalMatrix& a, std::uint64_t power_cap = kDefaultPowerCap);

struct Factorization {
  std::vector<mpz_class> primes;     // distinct, ascending
  std::vector<mpz_class> cofactors;  // composite parts left unsplit by the budget
};

/// Trial division to 1e6, then Pollard-rho (Brent) within an iteration budget.
Factorization factor(const mpz_class& n, std::uint64_t rho_budget = 2'000'000);

struct BadPrime {
  mpz_class prime;
  std::vector<std::string> reasons;  // e.g. "denominator of A1", "det of A2", "G(1,3)"
};

struct BadPrimeSet {
  std::vector<BadPrime> primes;  // ascending
  std::vector<std::pair<std::string, mpz_class>> unfactored;  // (source, cofactor)
  std::vector<OrderInfo> orders;
  std::vector<std::uint64_t> d;  // d_i: ord(A_i) when finite, n otherwise
  /// Integers whose prime divisors are excluded, with their source label.
  std::vector<std::pair<std::string, mpz_class>> obstructions;
};

/// Throws InvalidInput for n < 2, NotNonTrivial for an identity input.
BadPrimeSet bad_prime_set(const std::vector<RationalMatrix>& matrices, std::uint64_t n,
                          std::uint64_t power_cap = kDefaultPowerCap);

struct EmbedReport {
  std::optional<std::uint64_t> original_order;
  bool power_cap_hit = false;
  std::optional<std::uint64_t> image_order;  // empty: larger than the order-search cap
  std::string clause = "i";  // "i": finite order preserved, "ii": image order >= n
  bool satisfied = false;
};

struct EmbeddingResult {
  std::uint64_t p = 0;
  std::vector<group::GroupElement> images;
  std::vector<EmbedReport> reports;
  BadPrimeSet bad;
  std::vector<std::pair<std::uint64_t, std::string>> skipped;  // primes >= p_min rejected before p
};

/// Reduction of a rational matrix mod p (p must not divide any denominator).
group::GroupElement reduce_mod_p(const RationalMatrix& a, std::uint64_t p);

/// Smallest prime p >= p_min avoiding the bad set, with clauses (i)/(ii)
/// verified by order computation in GL_m(p). Throws PrimeSearchExhausted past
/// kPrimeSearchBound and VerificationFailed if a clause does not hold.
EmbeddingResult embed_mod_p(const std::vector<RationalMatrix>& matrices, std::uint64_t n,
                            std::optional<std::uint64_t> p_min = {}, std::uint64_t power_cap = kDefaultPowerCap);

/// max(m + 1, 5)
std::uint64_t default_p_min(std::size_t m);

/// {"matrices": [[["1","1/2"],["0","1"]], ...]}; entries as integers or "num/den" strings.
std::vector<RationalMatrix> parse_matrices(const nlohmann::json& j);
RationalMatrix parse_matrix(const nlohmann::json& j);
nlohmann::json embedding_to_json(const EmbeddingResult& result);
nlohmann::json bad_prime_set_to_json(const BadPrimeSet& bad);

}  // namespace anticonc::embed
