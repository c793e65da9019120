#include "anticonc/spectral/diagnostics.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>

#include "anticonc/charrep/fourier.hpp"
#include "anticonc/util/error.hpp"

namespace anticonc::spectral {

double folded_angle(std::uint64_t j, std::uint64_t k) {
  if (k == 0) throw Error(Errc::invalid_input, "order must be positive");
  j %= k;
  if (2 * j > k) j = k - j;  // j in [0, k/2]
  double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
  if (theta > std::numbers::pi / 2) theta = std::numbers::pi - theta;
  return theta;
}

ProofDiagnostics proof_diagnostics(const FiniteGroup& group, std::uint64_t p, std::uint64_t m, std::uint64_t s,
                                   const charrep::UnitaryIrrep& irrep, std::span<const ElementIndex> sequence,
                                   ElementIndex b) {
  if (m < 2) throw Error(Errc::invalid_input, "matrix size m must be >= 2");
  if (s < 1) throw Error(Errc::invalid_input, "s must be >= 1");
  if (sequence.empty()) throw Error(Errc::invalid_input, "sequence must be non-empty");
  if (b >= group.order()) throw Error(Errc::not_in_group, "B index out of range");

  ProofDiagnostics dg;
  dg.p = p;
  dg.m = m;
  dg.s = s;
  dg.n = sequence.size();
  dg.d = irrep.dim;
  const auto d = static_cast<double>(dg.d);

  mpz_ui_pow_ui(dg.d0_squared.get_mpz_t(), p, m * m - m - 1);
  mpz_sqrt(dg.d0_floor.get_mpz_t(), dg.d0_squared.get_mpz_t());
  dg.d0 = std::pow(static_cast<double>(p), (static_cast<double>(m * m - m) - 1.0) / 2.0);
  dg.large_representation = mpz_class(dg.d) * mpz_class(dg.d) >= dg.d0_squared;

  for (ElementIndex a : sequence) {
    const std::uint64_t k = group::element_order(group, a);
    dg.k.push_back(k);
    dg.m_cap.push_back(3 * dg.d / k);
  }
  dg.l0 = (120 * dg.d + s - 1) / s;
  dg.cascade_vacuous = dg.l0 >= dg.d;

  std::vector<std::vector<double>> b_sv;
  linalg::Matrix prod = linalg::Matrix::identity(dg.d);
  for (ElementIndex a : sequence) {
    const linalg::Matrix bi = (irrep.matrix(a) + irrep.matrix(group.inverse(a))) * Complex(0.5);
    b_sv.push_back(spectral::singular_values(bi).values);
    dg.max_b_singular = std::max(dg.max_b_singular, b_sv.back().front());
    prod = prod * bi;
  }
  const linalg::Matrix mm = prod * irrep.matrix(group.inverse(b));
  const auto sv = spectral::singular_values(mm).values;

  const double slack = std::log1p(1e-8);
  double log_lhs = 0.0;
  std::vector<double> log_rhs_i(sequence.size(), 0.0);
  for (std::size_t l = 1; l <= dg.d; ++l) {
    CascadeRow row;
    row.l = l;
    row.observed = sv[l - 1];
    log_lhs += std::log(sv[l - 1]);
    double log_rhs = 0.0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      log_rhs_i[i] += std::log(b_sv[i][l - 1]);
      log_rhs += log_rhs_i[i];
    }
    row.for_s6_log_lhs = log_lhs;
    row.for_s6_log_rhs = log_rhs;
    row.for_s6_holds = log_lhs <= log_rhs + slack || log_lhs == -INFINITY;
    dg.for_s6_all_hold = dg.for_s6_all_hold && row.for_s6_holds;
    if (l > dg.l0) {
      const auto ld = static_cast<double>(l);
      row.predicted = std::exp(-static_cast<double>(dg.n) * ld * ld / (422.0 * d * d));
      for (std::uint64_t mi : dg.m_cap) {
        if (mi == 0) {
          row.ab.emplace_back(std::nullopt);
          continue;
        }
        const auto li = static_cast<std::int64_t>(l);
        const auto four_m = static_cast<std::int64_t>(4 * mi);
        // floor division; l - 4 m_i may be negative when l0 < 40 m_i
        std::int64_t num = li - four_m;
        std::int64_t a = num >= 0 ? num / four_m : -((-num + four_m - 1) / four_m);
        row.ab.emplace_back(std::make_pair(a, li - four_m * a));
      }
    }
    dg.rows.push_back(std::move(row));
  }
  dg.abs_trace = std::abs(mm.trace());
  dg.trace_bound = 120.0 * d / static_cast<double>(s) + 1.0 + 18.3 * d / std::sqrt(static_cast<double>(dg.n));
  dg.trace_within = dg.abs_trace <= dg.trace_bound;
  dg.small_mass_bound = 5.0 / (3.0 * static_cast<double>(p));
  return dg;
}

void write_diagnostics_csv(std::ostream& out, const ProofDiagnostics& diag) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "l,observed_s_l,predicted_bound,for_s6_lhs,for_s6_rhs\n";
  for (const auto& r : diag.rows) {
    out << r.l << ',' << r.observed << ',';
    if (r.predicted) out << *r.predicted;
    out << ',' << std::exp(r.for_s6_log_lhs) << ',' << std::exp(r.for_s6_log_rhs) << '\n';
  }
  out.precision(old);
}

nlohmann::json diagnostics_to_json(const ProofDiagnostics& diag) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : diag.rows) {
    nlohmann::json ab = nlohmann::json::array();
    for (const auto& x : r.ab) {
      if (x) {
        ab.push_back({x->first, x->second});
      } else {
        ab.push_back(nullptr);
      }
    }
    rows.push_back({{"l", r.l},
                    {"observed_s_l", r.observed},
                    {"predicted_bound", r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json(nullptr)},
                    {"for_s6_log_lhs", r.for_s6_log_lhs},
                    {"for_s6_log_rhs", r.for_s6_log_rhs},
                    {"for_s6_holds", r.for_s6_holds},
                    {"a_b", ab}});
  }
  return {{"label", "diagnostic"},
          {"p", diag.p},
          {"m", diag.m},
          {"s", diag.s},
          {"n", diag.n},
          {"d", diag.d},
          {"d0_squared", diag.d0_squared.get_str()},
          {"d0_floor", diag.d0_floor.get_str()},
          {"d0", diag.d0},
          {"large_representation", diag.large_representation},
          {"k", diag.k},
          {"m_i", diag.m_cap},
          {"l0", diag.l0},
          {"cascade_vacuous", diag.cascade_vacuous},
          {"abs_trace", diag.abs_trace},
          {"trace_bound", diag.trace_bound},
          {"trace_within", diag.trace_within},
          {"small_mass_bound", diag.small_mass_bound},
          {"max_b_singular", diag.max_b_singular},
          {"for_s6_all_hold", diag.for_s6_all_hold},
          {"rows", rows}};
}

}  // namespace anticonc::spectral
