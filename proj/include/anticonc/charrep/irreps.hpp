#pragma once

// Explicit unitary irreducible representations obtained by splitting the
// regular representation with random elements of its commutant.

#include <complex>
#include <cstdint>
#include <vector>

#include "anticonc/group/finite_group.hpp"
#include "anticonc/linalg/matrix.hpp"

namespace anticonc::charrep {

using group::ElementIndex;
using group::FiniteGroup;
using linalg::Complex;

inline constexpr std::size_t kMaxRegularOrder = 2048;
inline constexpr int kMaxSplitRetries = 8;

struct UnitaryIrrep {
  std::size_t dim = 0;
  std::vector<Complex> matrices;   // |G| blocks of dim*dim, row-major, by element index
  std::vector<Complex> character;  // by element index

  linalg::Matrix matrix(ElementIndex g) const;
  const Complex* block(ElementIndex g) const { return matrices.data() + static_cast<std::size_t>(g) * dim * dim; }
};

struct IrrepCheck {
  double unitarity = 0.0;      // max_g ||Phi(g) Phi(g)* - I||_max
  double homomorphism = 0.0;   // max over sampled pairs of ||Phi(g)Phi(h) - Phi(gh)||_max
  double irreducibility = 0.0; // |(1/|G|) sum |chi|^2 - 1|
};

/// One irrep per isomorphism class, sorted by dimension then character.
/// Deterministic for a fixed seed. Throws SizeCap above kMaxRegularOrder and
/// SplitFailure when the random commutant draws keep failing to separate.
std::vector<UnitaryIrrep> decompose_regular(const FiniteGroup& group, std::uint64_t seed = 1, double tol = 1e-6);

/// `pairs` random (g, h) pairs for the homomorphism check.
IrrepCheck check_irrep(const FiniteGroup& group, const UnitaryIrrep& irrep, std::size_t pairs = 200,
                       std::uint64_t seed = 7);

/// Sum of dim^2 over the list.
std::uint64_t dimension_square_sum(const std::vector<UnitaryIrrep>& irreps);

}  // namespace anticonc::charrep
