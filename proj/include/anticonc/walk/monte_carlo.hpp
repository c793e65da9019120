#pragma once

#include <cstdint>
#include <vector>

#include "anticonc/walk/sequence.hpp"

namespace anticonc::walk {

inline constexpr std::size_t kDefaultDistinctCap = 1U << 24;

/// Plug-in estimate of rho from sampled products. The maximum empirical
/// frequency over-estimates sup_B P for finite samples; the number of
/// distinct products is reported so callers can judge the bias.
struct MonteCarloResult {
  std::uint64_t samples = 0;
  std::uint64_t max_count = 0;
  double plug_in_max_frequency = 0.0;
  std::size_t distinct_products = 0;
  double standard_error = 0.0;  // sqrt(p (1 - p) / samples) at the plug-in p
  std::vector<group::Word> argmax_encoding;  // smallest encoding among the most frequent products
};

/// Works on raw elements, no enumeration. Sample k draws its signs from a
/// counter-based stream keyed by (seed, k), so the output does not depend on
/// `threads`. Throws CapExceeded once more than `distinct_cap` distinct
/// products have been seen by one worker or after merging.
MonteCarloResult rho_monte_carlo(const SignedSequence& sequence, std::uint64_t samples, std::uint64_t seed,
                                 unsigned threads = 1, std::size_t distinct_cap = kDefaultDistinctCap);

/// The sign bits used for sample k, exposed for tests.
bool sample_sign(std::uint64_t seed, std::uint64_t sample, std::size_t step);

}  // namespace anticonc::walk
