#include "anticonc/spectral/properties.hpp"

#include <algorithm>
#include <random>

namespace anticonc::spectral {

PropertySuiteReport run_property_suites(const PropertySuiteConfig& config) {
  PropertySuiteReport r;
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> size(2, 20);
  for (std::size_t t = 0; t < config.pairs; ++t) {
    const std::size_t d = size(rng);
    const Matrix m = linalg::random_complex_gaussian(d, d, rng);
    const Matrix mp = linalg::random_complex_gaussian(d, d, rng);
    if (!verify_trace_bound(m).pass) ++r.trace_failures;
    const auto prod = verify_product_bounds(m, mp);
    if (!prod.pass()) ++r.product_failures;
    r.worst_single_ratio = std::max(r.worst_single_ratio, prod.worst_single_ratio);
    r.worst_product_ratio = std::max(r.worst_product_ratio, prod.worst_product_ratio);
    ++r.pairs;
  }
  for (std::size_t d = 2; d <= 16; ++d) {
    for (std::size_t t = 0; t < config.unitaries_per_size; ++t) {
      const auto cs = cos_spectrum(linalg::random_unitary(d, rng));
      if (!cs.pass) ++r.cos_failures;
      r.worst_cos_deviation = std::max(r.worst_cos_deviation, cs.max_deviation);
      ++r.unitaries;
    }
  }
  r.trig = trig_bounds(config.grid_step);
  return r;
}

nlohmann::json property_report_to_json(const PropertySuiteReport& r) {
  return {{"pass", r.pass()},
          {"trace_product",
           {{"pairs", r.pairs},
            {"trace_failures", r.trace_failures},
            {"product_failures", r.product_failures},
            {"worst_single_ratio", r.worst_single_ratio},
            {"worst_product_ratio", r.worst_product_ratio}}},
          {"cos_spectrum",
           {{"unitaries", r.unitaries}, {"failures", r.cos_failures}, {"worst_deviation", r.worst_cos_deviation}}},
          {"trig_grid",
           {{"points", r.trig.points},
            {"sin_violation", r.trig.sin_violation},
            {"cos_violation", r.trig.cos_violation},
            {"chain_violation", r.trig.chain_violation},
            {"pass", r.trig.pass}}}};
}

}  // namespace anticonc::spectral
