#pragma once

#include <cstddef>
#include <optional>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/convolution.hpp"

namespace hopfkit {

/// A Hopf algebra attached to B together with its structure map: the
/// projection B -> H for envelopes, the inclusion C -> B for cofree objects.
struct HopfResult {
  enum class Direction { quotient, sub };

  Bialgebra hopf;
  Endo antipode;
  BialgebraMorphism structure_map;
  Direction direction = Direction::quotient;
  /// ker i_B for envelopes, K(B) = im p_B for cofree objects.
  Subspace defining_subspace;
};

/// Throws InvariantViolation unless S*Id = u∘ε = Id*S on h.
void require_antipode(const Bialgebra& h, const Endo& s);

/// B / ker i_B, after checking that ker i_B is already a bi-ideal.
QuotientResult Q_of(const Bialgebra& b);
QuotientResult Q_of(const OslashSpace& os);

HopfResult hopf_envelope(const Bialgebra& b);
HopfResult hopf_envelope(const OslashSpace& os);

struct OslashIsoReport {
  /// φ(x⊘y) = q(x) S(q(y)), H.dim() × quotient_dim.
  Matrix phi;
  bool well_defined = false;
  bool bijective = false;
  bool coalgebra_map = false;
  /// φ∘i_B = q_B.
  bool compatible_with_i = false;

  bool ok() const { return well_defined && bijective && coalgebra_map && compatible_with_i; }
};

OslashIsoReport oslash_iso_report(const OslashSpace& os, const HopfResult& envelope);
bool oslash_iso_check(const Bialgebra& b);

/// For cocommutative B: the flip x⊘y ↦ y⊘x descends to B⊘B and corresponds to
/// the antipode of H(B) under φ. Throws PreconditionError otherwise.
bool cocommutative_envelope_check(const Bialgebra& b);

struct IterationResult {
  Bialgebra result;
  std::size_t steps = 0;
};

/// Applies Q until i is injective. In finite dimension one step suffices; more
/// steps, or a result differing from hopf_envelope, raise InvariantViolation.
IterationResult iterate_Q(const Bialgebra& b);

struct Factorization {
  /// g with g∘q = f, if one exists.
  std::optional<Matrix> map;
  /// The solution set is a single point.
  bool unique = false;
  bool bialgebra_map = false;
};

/// Factors a bialgebra map f: B -> target through the projection q_B of an envelope.
Factorization factor_through_envelope(const HopfResult& envelope, const Matrix& f, const Bialgebra& target);

}  // namespace hopfkit
