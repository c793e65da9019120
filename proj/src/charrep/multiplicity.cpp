#include "anticonc/charrep/multiplicity.hpp"

#include <cmath>
#include <numbers>

#include "anticonc/util/error.hpp"

namespace anticonc::charrep {

namespace {

constexpr double kIntegralTol = 1e-6;
constexpr double kHypothesisSlack = 1e-9;
constexpr double kStrictMargin = 1e-9;

Complex root_of_unity(std::uint64_t j, std::uint64_t k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j % k) / static_cast<double>(k));
}

}  // namespace

MultiplicityProfile eigenvalue_multiplicities(std::span<const Complex> chi_powers, ElementIndex g, std::uint64_t k,
                                              std::uint64_t degree) {
  if (k == 0 || chi_powers.size() != k) throw Error(Errc::invalid_input, "need chi(g^i) for i = 0..k-1");
  MultiplicityProfile p;
  p.g = g;
  p.k = k;
  p.k1 = 0;
  p.epsilon = root_of_unity(1, k);
  std::uint64_t total = 0;
  for (std::uint64_t j = 0; j < k; ++j) {
    Complex acc = 0.0;
    for (std::uint64_t i = 0; i < k; ++i) acc += chi_powers[i] * std::conj(root_of_unity(i * j, k));
    acc /= static_cast<double>(k);
    const double r = std::round(acc.real());
    if (std::abs(acc - Complex(r)) > kIntegralTol || r < 0.0) {
      throw Error(Errc::non_integral_multiplicity, "multiplicity " + std::to_string(acc.real()) + " is not integral");
    }
    p.mult.push_back(static_cast<std::uint64_t>(r));
    total += static_cast<std::uint64_t>(r);
  }
  if (total != degree) throw Error(Errc::non_integral_multiplicity, "multiplicities do not sum to chi(1)");
  return p;
}

std::uint64_t central_order(const FiniteGroup& group, const CharacterTable& table, ElementIndex g) {
  ElementIndex x = g;
  for (std::uint64_t t = 1;; ++t) {
    if (table.class_sizes[table.class_of[x]] == 1) return t;
    x = group.multiply(x, g);
  }
}

MultiplicityProfile multiplicity_profile(const FiniteGroup& group, const CharacterTable& table, std::size_t chi,
                                         ElementIndex g) {
  const std::uint64_t k = group::element_order(group, g);
  std::vector<Complex> powers;
  ElementIndex x = FiniteGroup::identity();
  for (std::uint64_t i = 0; i < k; ++i) {
    powers.push_back(table.value(chi, x));
    x = group.multiply(x, g);
  }
  auto p = eigenvalue_multiplicities(powers, g, k, table.degrees[chi]);
  p.k1 = central_order(group, table, g);
  return p;
}

std::string status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::passed: return "passed";
    case BoundStatus::violated: return "violated";
    case BoundStatus::vacuous: return "vacuous";
    case BoundStatus::hypothesis_failed: return "hypothesis_failed";
  }
  return "unknown";
}

MultiplicityReport check_multiplicity_bounds(const CharacterTable& table, const FiniteGroup& group, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::invalid_input, "alpha must lie in (0, 1)");
  MultiplicityReport rep;
  rep.alpha = alpha;
  const std::size_t classes = table.class_count();
  for (std::size_t chi = 0; chi < table.values.size(); ++chi) {
    double ratio = 0.0;
    if (table.degrees[chi] > 1) {
      for (std::size_t c = 0; c < classes; ++c) {
        if (table.class_sizes[c] == 1) continue;
        ratio = std::max(ratio, std::abs(table.values[chi][c]) / static_cast<double>(table.degrees[chi]));
      }
    }
    rep.chi_ratio.push_back(ratio);
  }

  for (std::size_t chi = 0; chi < table.values.size(); ++chi) {
    const std::uint64_t d = table.degrees[chi];
    if (d <= 1) continue;
    const bool hypothesis = rep.chi_ratio[chi] <= alpha + kHypothesisSlack;
    for (std::size_t c = 0; c < classes; ++c) {
      if (table.class_sizes[c] == 1) continue;
      MultiplicityEntry e;
      e.chi = chi;
      e.cls = c;
      e.g = table.representatives[c];
      e.degree = d;
      const auto profile = multiplicity_profile(group, table, chi, e.g);
      e.k = profile.k;
      e.k1 = profile.k1;
      const double inv_k1 = 1.0 / static_cast<double>(e.k1);
      e.lower = (inv_k1 - alpha) * static_cast<double>(d);
      e.upper = (inv_k1 + alpha) * static_cast<double>(d);

      // Phi(g^{k1}) is the scalar chi(g^{k1})/chi(1), so every eigenvalue
      // lambda = epsilon^j of Phi(g) has lambda^{k1} equal to it.
      ElementIndex gk1 = FiniteGroup::identity();
      for (std::uint64_t t = 0; t < e.k1; ++t) gk1 = group.multiply(gk1, e.g);
      const Complex scalar = table.value(chi, gk1) / static_cast<double>(d);
      bool stray = false;
      for (std::uint64_t j = 0; j < e.k; ++j) {
        const bool candidate = std::abs(root_of_unity(j * e.k1, e.k) - scalar) < 1e-6;
        if (candidate) {
          e.candidate_exponents.push_back(j);
          e.candidate_mults.push_back(profile.mult[j]);
        } else if (profile.mult[j] != 0) {
          stray = true;
        }
      }

      if (!hypothesis) {
        e.status = BoundStatus::hypothesis_failed;
      } else if (e.lower < 0.0 && e.upper > static_cast<double>(d)) {
        e.status = BoundStatus::vacuous;
      } else {
        bool ok = !stray;
        for (auto m : e.candidate_mults) {
          const auto mv = static_cast<double>(m);
          if (!(mv > e.lower + kStrictMargin && mv < e.upper - kStrictMargin)) ok = false;
        }
        e.status = ok ? BoundStatus::passed : BoundStatus::violated;
      }
      switch (e.status) {
        case BoundStatus::passed: ++rep.passed; break;
        case BoundStatus::violated: ++rep.violated; break;
        case BoundStatus::vacuous: ++rep.vacuous; break;
        case BoundStatus::hypothesis_failed: ++rep.hypothesis_failed; break;
      }
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

std::optional<CharacterRatio> max_character_ratio(const CharacterTable& table) {
  std::optional<CharacterRatio> best;
  for (std::size_t chi = 0; chi < table.values.size(); ++chi) {
    if (table.degrees[chi] <= 1) continue;
    for (std::size_t c = 0; c < table.class_count(); ++c) {
      if (table.class_sizes[c] == 1) continue;
      const double r = std::abs(table.values[chi][c]) / static_cast<double>(table.degrees[chi]);
      if (!best || r > best->value) best = CharacterRatio{r, chi, c};
    }
  }
  return best;
}

nlohmann::json multiplicity_report_to_json(const MultiplicityReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"character", e.chi},
                       {"class", e.cls},
                       {"representative_index", e.g},
                       {"degree", e.degree},
                       {"k", e.k},
                       {"k1", e.k1},
                       {"lower", e.lower},
                       {"upper", e.upper},
                       {"candidate_exponents", e.candidate_exponents},
                       {"multiplicities", e.candidate_mults},
                       {"status", status_name(e.status)}});
  }
  return {{"alpha", report.alpha},
          {"character_ratios", report.chi_ratio},
          {"summary",
           {{"passed", report.passed},
            {"violated", report.violated},
            {"vacuous", report.vacuous},
            {"hypothesis_failed", report.hypothesis_failed}}},
          {"entries", entries}};
}

}  // namespace anticonc::charrep
