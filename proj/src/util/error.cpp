#include "anticonc/util/error.hpp"

namespace anticonc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::mixed_variants: return "MixedVariants";
    case Errc::not_in_group: return "NotInGroup";
    case Errc::too_many_classes: return "TooManyClasses";
    case Errc::no_suitable_prime: return "NoSuitablePrime";
    case Errc::split_failure: return "SplitFailure";
    case Errc::size_cap: return "SizeCap";
    case Errc::incomplete_irreps: return "IncompleteIrreps";
    case Errc::imag_too_large: return "ImagTooLarge";
    case Errc::non_integral_multiplicity: return "NonIntegralMultiplicity";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::not_unitary: return "NotUnitary";
    case Errc::power_cap_exceeded: return "PowerCapExceeded";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_non_trivial: return "NotNonTrivial";
    case Errc::prime_search_exhausted: return "PrimeSearchExhausted";
    case Errc::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace anticonc
