#pragma once

// Randomized property suites for the trace, product and cosine-spectrum
// inequalities plus the trigonometric grid, shared by the CLI and the
// acceptance harness.

#include <cstdint>

#include <json.hpp>

#include "anticonc/spectral/spectral.hpp"

namespace anticonc::spectral {

struct PropertySuiteConfig {
  std::uint64_t seed = 1;
  std::size_t pairs = 1000;             // random (M, M') pairs, sizes 2..20
  std::size_t unitaries_per_size = 200; // per d in 2..16
  double grid_step = 1e-4;
};

struct PropertySuiteReport {
  std::size_t pairs = 0;
  std::size_t trace_failures = 0;
  std::size_t product_failures = 0;
  double worst_single_ratio = 0.0;
  double worst_product_ratio = 0.0;
  std::size_t unitaries = 0;
  std::size_t cos_failures = 0;
  double worst_cos_deviation = 0.0;
  TrigBounds trig;
  bool pass() const { return trace_failures == 0 && product_failures == 0 && cos_failures == 0 && trig.pass; }
};

PropertySuiteReport run_property_suites(const PropertySuiteConfig& config);
nlohmann::json property_report_to_json(const PropertySuiteReport& report);

}  // namespace anticonc::spectral
