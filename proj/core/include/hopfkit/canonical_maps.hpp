#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfkit/bialgebra.hpp"
#include "hopfkit/convolution.hpp"

namespace hopfkit {

/// B⊘B = (B⊗B)/W with W = span{a h₁ ⊗ b h₂ : a, b ∈ B, h ∈ B⁺}.
///
/// The quotient basis consists of the classes of e_x⊗e_y at the pair indices
/// x*d + y listed in `representatives` (the non-pivot coordinates of W).
struct OslashSpace {
  Bialgebra source;
  Subspace relations;
  std::vector<std::size_t> representatives;
  std::size_t quotient_dim = 0;
  /// π : B⊗B -> B⊘B, quotient_dim × d².
  Matrix projection;
  /// Δ(x⊘y) = (x₁⊘y₂)⊗(x₂⊘y₁), indexed (c*q + a)*q + b like Bialgebra::comult.
  std::vector<Scalar> comult;
  /// ε(x⊘y) = ε(x)ε(y).
  Vector counit;
  /// i_B(b) = b⊘1, quotient_dim × d.
  Matrix i_matrix;
  Subspace ker_i;
  bool surjective = false;
  bool injective = false;

  /// Class of x⊗y.
  Vector class_of(const Vector& x, const Vector& y) const;
  /// (a⊗b)·(x⊘y) = ax⊘by, acting on a class given in quotient coordinates.
  Vector act(const Vector& a, const Vector& b, const Vector& cls) const;
  /// Δ of a class, flat over (B⊘B)⊗(B⊘B).
  Vector coproduct(const Vector& cls) const;
};

OslashSpace build_oslash(const Bialgebra& b);

/// B⊠B = ker γ ⊆ B⊗B with γ(x⊗y) = x₁⊗y₁⊗x₂y₂ − x⊗y⊗1.
struct BoxslashSpace {
  Bialgebra source;
  Subspace subspace;
  /// d² × dim, columns are the canonical basis of `subspace`.
  Matrix inclusion;
  /// (u⊗v)(x⊗y) = ux ⊗ yv in the canonical basis, indexed (i*m + j)*m + k.
  std::vector<Scalar> mult;
  /// Coordinates of 1⊗1.
  Vector unit;
  /// p_B(x⊗y) = x ε(y), d × dim.
  Matrix p_matrix;
  Subspace im_p;
  bool injective = false;
  bool surjective = false;

  std::size_t dim() const { return subspace.dim(); }
  /// Product of two elements given in canonical coordinates.
  Vector multiply(const Vector& z, const Vector& w) const;
};

/// d³ × d² matrix of γ.
Matrix gamma_matrix(const Bialgebra& b);
BoxslashSpace build_boxslash(const Bialgebra& b);

/// S with i_B(S(y)) = 1⊘y for all y (free variables of the section set to zero).
Endo S_witness(const OslashSpace& os);
Endo S_witness(const Bialgebra& b);
/// T(b) = (ε⊗id)(t(b)) for a retraction t of p_B; satisfies T(p(z)) = (ε⊗id)(z) on B⊠B.
Endo T_witness(const BoxslashSpace& bs);
Endo T_witness(const Bialgebra& b);

/// S(ab) − S(b)S(a) and a₁S(a₂) − ε(a)1 lie in ker i_B for all basis a, b.
bool s_witness_residuals_in_kernel(const OslashSpace& os, const Endo& s);
/// T(p(z)) = (ε⊗id)(z) on a basis of B⊠B, and a₁T(a₂) = ε(a)1 for a in im p_B.
bool t_witness_identities(const BoxslashSpace& bs, const Endo& t);

struct FrobeniusReport {
  bool i_bijective = false;
  bool p_bijective = false;
  /// Right antipode that is an anti-algebra and anti-coalgebra map, if one exists.
  std::optional<Endo> right_antipode;
  /// i_B⁻¹(1⊘y) when i_B is bijective; a verified right antipode.
  std::optional<Endo> extracted_right_antipode;
  /// The three conditions above agree.
  bool consistent = false;
  /// x⊗y ↦ x y₁ ⊗ y₂; surjectivity forces i_B surjective.
  bool can_surjective = false;
  /// x⊗y ↦ x₁ ⊗ x₂ y; injectivity forces p_B injective.
  bool can_prime_injective = false;
};

FrobeniusReport frobenius_report(const Bialgebra& b);
FrobeniusReport frobenius_report(const OslashSpace& os, const BoxslashSpace& bs);

/// Matrices of can and can′ on B⊗B.
Matrix can_matrix(const Bialgebra& b);
Matrix can_prime_matrix(const Bialgebra& b);

/// B⊘B as a quotient bialgebra of B⊗B^cop, when W is also a right ideal.
std::optional<QuotientResult> oslash_bialgebra(const OslashSpace& os);
/// B⊠B as a sub-bialgebra of B⊗B^op, when Δ(B⊠B) ⊆ (B⊠B)⊗(B⊗B).
std::optional<SubBialgebraResult> boxslash_bialgebra(const BoxslashSpace& bs);
/// If B⊘B is a bialgebra with an antipode, whether that antipode is x⊘y ↦ y⊘x.
std::optional<bool> oslash_flip_antipode(const OslashSpace& os);
/// If B⊠B is a bialgebra with an antipode, whether that antipode is x⊗y ↦ y⊗x.
std::optional<bool> boxslash_flip_antipode(const BoxslashSpace& bs);

struct InducedMap {
  Matrix matrix;
  /// (f⊘f)∘i_B = i_C∘f, respectively p_C∘(f⊠f) = f∘p_B.
  bool commutes = false;
  /// f⊘f is a coalgebra map, respectively f⊠f is an algebra map.
  bool structure_preserved = false;
};

/// f⊘f : B⊘B -> C⊘C for a bialgebra map f (PreconditionError otherwise).
InducedMap induced_oslash_map(const Matrix& f, const OslashSpace& source, const OslashSpace& target);
/// f⊠f : B⊠B -> C⊠C in canonical coordinates.
InducedMap induced_boxslash_map(const Matrix& f, const BoxslashSpace& source, const BoxslashSpace& target);

}  // namespace hopfkit
