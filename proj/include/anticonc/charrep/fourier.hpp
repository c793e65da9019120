#pragma once

// Point probabilities of the signed product from the irreducible
// representations: P(prod = B) = (1/|G|) sum_Phi dim(Phi)
// tr( prod_i (Phi(A_i) + Phi(A_i^{-1}))/2 * Phi(B^{-1}) ).

#include <span>
#include <vector>

#include "anticonc/charrep/irreps.hpp"

namespace anticonc::charrep {

inline constexpr double kMaxImaginary = 1e-9;

/// Throws IncompleteIrreps when sum dim^2 != |G| and ImagTooLarge when the
/// trace sum has an imaginary part above kMaxImaginary.
double fourier_probability(const FiniteGroup& group, const std::vector<UnitaryIrrep>& irreps,
                           std::span<const ElementIndex> sequence, ElementIndex b);

/// The same for every B at once, indexed by element. Per-representation
/// terms are summed in list order, so the result does not depend on `threads`.
std::vector<double> fourier_distribution(const FiniteGroup& group, const std::vector<UnitaryIrrep>& irreps,
                                         std::span<const ElementIndex> sequence, unsigned threads = 1);

/// prod_i (Phi(A_i) + Phi(A_i^{-1}))/2, left to right.
linalg::Matrix averaged_product(const FiniteGroup& group, const UnitaryIrrep& irrep,
                                std::span<const ElementIndex> sequence);

}  // namespace anticonc::charrep
