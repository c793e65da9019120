#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anticonc {

enum class Errc {
  invalid_input,
  cap_exceeded,
  mixed_variants,
  not_in_group,
  too_many_classes,
  no_suitable_prime,
  split_failure,
  size_cap,
  incomplete_irreps,
  imag_too_large,
  non_integral_multiplicity,
  no_convergence,
  not_unitary,
  power_cap_exceeded,
  not_invertible,
  not_non_trivial,
  prime_search_exhausted,
  verification_failed,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying a machine-readable error code. All library failures
/// that a caller can act on are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace anticonc
