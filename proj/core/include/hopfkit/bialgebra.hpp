#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfkit/linear.hpp"

namespace hopfkit {

/// Finite-dimensional bialgebra given by structure constants in a fixed basis
/// e_0, ..., e_{d-1}.
///
///   e_i e_j  = sum_k mult(i, j, k) e_k
///   Δ(e_k)   = sum_{i,j} comult(k, i, j) e_i ⊗ e_j
///   1        = sum_i unit()[i] e_i
///   ε(e_i)   = counit()[i]
///
/// Elements of B⊗B are flat vectors indexed by i * d + j. Construction only
/// checks shapes; use verify_axioms() for the algebraic identities.
class Bialgebra {
 public:
  Bialgebra() = default;
  /// mult has d^3 entries indexed (i*d + j)*d + k, comult has d^3 entries
  /// indexed (k*d + i)*d + j. Empty labels are replaced by "e0", "e1", ...
  Bialgebra(Field field, std::size_t dim, std::vector<Scalar> mult, std::vector<Scalar> comult,
            Vector unit, Vector counit, std::vector<std::string> labels = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Scalar& mult(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& comult(std::size_t k, std::size_t i, std::size_t j) const {
    return comult_[(k * dim_ + i) * dim_ + j];
  }
  const std::vector<Scalar>& mult_tensor() const { return mult_; }
  const std::vector<Scalar>& comult_tensor() const { return comult_; }
  const Vector& unit() const { return unit_; }
  const Vector& counit() const { return counit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Product of two elements given in coordinates.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// e_i e_j.
  Vector product(std::size_t i, std::size_t j) const;
  /// Δ(v) as a flat vector of B⊗B.
  Vector coproduct(const Vector& v) const;
  /// Δ(e_k) as a flat vector of B⊗B.
  Vector coproduct_basis(std::size_t k) const;
  Scalar counit_of(const Vector& v) const;

  /// Product in the tensor algebra B⊗B: (a⊗b)(c⊗d) = ac ⊗ bd.
  Vector multiply_tensor(const Vector& x, const Vector& y) const;
  /// Applies f ⊗ g (both d×d) to a flat vector of B⊗B.
  Vector apply_tensor(const Matrix& f, const Matrix& g, const Vector& x) const;

  /// Nonzero structure constants, for sparse loops.
  struct Term {
    std::size_t a;
    std::size_t b;
    Scalar coeff;
  };
  /// Nonzero (k, coeff) pairs of e_i e_j, stored as Term{k, 0, coeff}.
  const std::vector<Term>& product_terms(std::size_t i, std::size_t j) const {
    return mult_sparse_[i * dim_ + j];
  }
  /// Nonzero (i, j, coeff) triples of Δ(e_k).
  const std::vector<Term>& coproduct_terms(std::size_t k) const { return comult_sparse_[k]; }

  /// Entrywise equality of structure constants (labels ignored).
  bool same_structure(const Bialgebra& other) const;

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> mult_;
  std::vector<Scalar> comult_;
  Vector unit_;
  Vector counit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> mult_sparse_;
  std::vector<std::vector<Term>> comult_sparse_;
};

/// Flat coordinates of x ⊗ y.
Vector tensor_vectors(const Vector& x, const Vector& y);
/// Flip x⊗y -> y⊗x on a flat vector of V⊗V with dim V = d.
Vector flip_tensor(const Vector& x, std::size_t d);

/// Human-readable linear combination, e.g. "x^2 - 1" or "2*y + x*y".
std::string format_combination(const Vector& v, const std::vector<std::string>& labels);

// ---------------------------------------------------------------------------
// Axiom verification

struct AxiomCheck {
  std::string name;
  bool ok = true;
  std::size_t failures = 0;
  /// Basis indices of the first failure (meaning depends on the axiom).
  std::vector<std::size_t> witness;
  /// Difference of the two sides at the first failure.
  Vector residual;
};

struct AxiomReport {
  AxiomCheck associativity{"associativity", true, 0, {}, {}};
  AxiomCheck unitality{"unitality", true, 0, {}, {}};
  AxiomCheck coassociativity{"coassociativity", true, 0, {}, {}};
  AxiomCheck counitality{"counitality", true, 0, {}, {}};
  /// Δ and ε are algebra maps.
  AxiomCheck compatibility{"compatibility", true, 0, {}, {}};

  bool all_ok() const {
    return associativity.ok && unitality.ok && coassociativity.ok && counitality.ok && compatibility.ok;
  }
  std::vector<const AxiomCheck*> checks() const {
    return {&associativity, &unitality, &coassociativity, &counitality, &compatibility};
  }
  /// First failing check, or nullptr.
  const AxiomCheck* first_failure() const;
};

AxiomReport verify_axioms(const Bialgebra& b);
/// Throws VerificationError naming the first failing axiom and its witness.
void require_bialgebra(const Bialgebra& b);

/// Coassociativity and counitality of bare coalgebra tensors (layout as in Bialgebra).
bool is_coalgebra(Field field, std::size_t dim, const std::vector<Scalar>& comult, const Vector& counit);

bool is_commutative(const Bialgebra& b);
bool is_cocommutative(const Bialgebra& b);

// ---------------------------------------------------------------------------
// Derived bialgebras

/// B ⊗ C with componentwise structure; basis (i, j) -> i * dim(C) + j.
Bialgebra tensor(const Bialgebra& b, const Bialgebra& c);
Bialgebra op(const Bialgebra& b);
Bialgebra cop(const Bialgebra& b);
/// Linear dual in the dual basis: multiplication from Δ, comultiplication from m.
Bialgebra dual(const Bialgebra& b);

// ---------------------------------------------------------------------------
// Morphisms

struct BialgebraMorphism {
  std::shared_ptr<const Bialgebra> source;
  std::shared_ptr<const Bialgebra> target;
  /// target.dim() x source.dim()
  Matrix matrix;
  bool algebra_map = false;
  bool coalgebra_map = false;

  bool is_bialgebra_map() const { return algebra_map && coalgebra_map; }
};

BialgebraMorphism morphism_check(const Matrix& f, const Bialgebra& source, const Bialgebra& target);

// ---------------------------------------------------------------------------
// Ideals, coideals, quotients and sub-bialgebras

enum class Side { left, right, two_sided };

/// B⁺ = ker ε.
Subspace augmentation_ideal(const Bialgebra& b);
/// Least subspace containing v and closed under multiplication by B on the given side(s).
Subspace ideal_closure(const Bialgebra& b, const Subspace& v, Side side);
bool is_coideal(const Bialgebra& b, const Subspace& v);

struct QuotientResult {
  Bialgebra quotient;
  /// The canonical projection B -> B/I.
  BialgebraMorphism projection;
};

/// B/I with basis the classes of e_c for c outside the pivots of I.
/// Throws PreconditionError if I is not a two-sided ideal and a coideal.
QuotientResult quotient_by_biideal(const Bialgebra& b, const Subspace& ideal);

struct SubBialgebraResult {
  Bialgebra sub;
  /// The inclusion W -> B.
  BialgebraMorphism inclusion;
};

/// Restriction of b to w in the canonical basis of w. Throws PreconditionError
/// (with a witness) unless w contains 1, is multiplicatively closed, and Δ(w) ⊆ w⊗w.
SubBialgebraResult sub_bialgebra(const Bialgebra& b, const Subspace& w);

Subspace primitives(const Bialgebra& b);
bool is_grouplike(const Bialgebra& b, const Vector& v);

}  // namespace hopfkit
