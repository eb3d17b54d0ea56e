#pragma once

#include "hopfkit/envelope.hpp"

namespace hopfkit {

/// K(B) = {b : Δ(b) ∈ im p_B ⊗ B}, checked to coincide with im p_B.
SubBialgebraResult K_of(const Bialgebra& b);
SubBialgebraResult K_of(const BoxslashSpace& bs);

HopfResult cofree_hopf(const Bialgebra& b);
HopfResult cofree_hopf(const BoxslashSpace& bs);

/// Applies K until it returns the whole bialgebra; at most one proper step.
IterationResult iterate_K(const Bialgebra& b);

/// {Σ x⊗y ∈ B⊠B : Σ y⊗x ∈ B⊠B} as a sub-bialgebra of B⊗B^op, with the flip as
/// antipode and p_B as structure map. Requires B cocommutative.
HopfResult cocommutative_cofree(const Bialgebra& b);

struct DualityReport {
  std::size_t envelope_dim = 0;
  std::size_t cofree_dual_dim = 0;
  /// qᵀ : H(B)* -> B* is a bialgebra map.
  bool transpose_is_morphism = false;
  bool transpose_injective = false;
  /// im qᵀ = K(B*).
  bool image_matches = false;

  bool ok() const {
    return envelope_dim == cofree_dual_dim && transpose_is_morphism && transpose_injective && image_matches;
  }
};

/// Compares H(B) with C(B*) through the transpose of q_B.
DualityReport duality_report(const Bialgebra& b);
/// duality_report(b).ok(), raising InvariantViolation when it fails.
bool duality_check(const Bialgebra& b);

}  // namespace hopfkit
