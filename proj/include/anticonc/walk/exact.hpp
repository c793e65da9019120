#pragma once

// Exact law of the random signed product A_1^{±1} A_2^{±1} ... A_n^{±1}
// by repeated convolution over an enumerated group. Counts are exact big
// integers over the common denominator 2^n.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "anticonc/group/finite_group.hpp"
#include "anticonc/walk/sequence.hpp"

namespace anticonc::walk {

inline constexpr std::size_t kMaxSequenceLength = 4096;
/// Groups up to this order use a dense count array; above it a sparse map.
inline constexpr std::size_t kDenseDistributionLimit = 4'000'000;

/// A dyadic rational numerator / 2^denom_exp.
struct DyadicRational {
  mpz_class numerator;
  unsigned denom_exp = 0;

  double to_double() const;
  /// Exact comparison numerator / 2^denom_exp >= 1 / s.
  bool at_least_reciprocal(std::uint64_t s) const;
};

struct ExactDistribution {
  std::vector<mpz_class> counts;  // indexed by element index
  unsigned denom_exp = 0;

  double probability(ElementIndex b) const;
  mpz_class total() const;
  std::vector<ElementIndex> support() const;
};

struct SparseDistribution {
  std::map<ElementIndex, mpz_class> counts;
  unsigned denom_exp = 0;
};

struct RhoResult {
  mpz_class count;
  unsigned denom_exp = 0;
  std::vector<ElementIndex> maximizers;  // ascending index

  DyadicRational rational() const { return {count, denom_exp}; }
  double value() const { return rational().to_double(); }
};

/// `threads` only changes how each step is scheduled; results are identical.
ExactDistribution exact_distribution(const FiniteGroup& group, std::span<const ElementIndex> sequence,
                                     unsigned threads = 1);
ExactDistribution exact_distribution(const FiniteGroup& group, const SignedSequence& sequence,
                                     unsigned threads = 1);
SparseDistribution exact_distribution_sparse(const FiniteGroup& group, std::span<const ElementIndex> sequence);

RhoResult rho_exact(const FiniteGroup& group, std::span<const ElementIndex> sequence, unsigned threads = 1);
RhoResult rho_exact(const FiniteGroup& group, const SignedSequence& sequence, unsigned threads = 1);
RhoResult rho_of(const ExactDistribution& dist);

/// rho of every prefix A_1..A_k for k = 1..n, from one pass of the convolution.
std::vector<RhoResult> rho_prefix_sweep(const FiniteGroup& group, std::span<const ElementIndex> sequence,
                                        unsigned threads = 1);

}  // namespace anticonc::walk
