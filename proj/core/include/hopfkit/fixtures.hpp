#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/monoid.hpp"

namespace hopfkit {

/// 𝕜⟨x, y | yx = −xy, x³ = x, y² = 0⟩ with Δx = x⊗x, Δy = x⊗y + y⊗1 on the
/// basis 1, x, x², y, xy, x²y (in this order). Characteristic 2 is rejected.
Bialgebra quotient_quantum_plane(Field field = Field::rationals());

/// Sweedler's four-dimensional Hopf algebra on 1, g, x, gx with g² = 1, x² = 0,
/// xg = −gx, Δg = g⊗g, Δx = g⊗x + x⊗1. Characteristic 2 is rejected.
Bialgebra sweedler_algebra(Field field = Field::rationals());

/// Coalgebra data without an algebra part.
struct Coalgebra {
  Field field;
  std::size_t dim = 0;
  /// (k*d + i)*d + j, as in Bialgebra.
  std::vector<Scalar> comult;
  Vector counit;
  std::vector<std::string> labels;
};

/// Throws PreconditionError unless coassociative and counital.
void require_coalgebra(const Coalgebra& c);
/// Matrix coalgebra on e_ij (index i*n + j) with Δ(e_ij) = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij.
Coalgebra matrix_coalgebra(std::size_t n, Field field = Field::rationals());
/// k group-like elements.
Coalgebra grouplike_coalgebra(std::size_t k, Field field = Field::rationals());

/// 𝕜·1 ⊕ C with c·c′ = ε(c)c′; index 0 is the adjoined unit.
Bialgebra radford_adjoin_unit(const Coalgebra& c);

/// 𝕜⟨x | x^{n+1} = x⟩ with Δx = 1⊗x + x⊗(1 − xⁿ), ε(x) = 0, basis 1, x, ..., xⁿ.
Bialgebra radford_dual(std::size_t n, Field field = Field::rationals());

struct Fixture {
  std::string name;
  Bialgebra bialgebra;
  /// Set when the bialgebra is 𝕜M for this monoid.
  std::optional<FiniteMonoid> monoid;
};

/// The built-in corpus, in a fixed order. Fixtures unavailable over `field`
/// (those needing characteristic ≠ 2) are skipped.
std::vector<Fixture> builtin_corpus(Field field = Field::rationals());
/// One corpus entry by name; throws PreconditionError for unknown names.
Fixture builtin_fixture(const std::string& name, Field field = Field::rationals());
std::vector<std::string> builtin_fixture_names();

}  // namespace hopfkit
