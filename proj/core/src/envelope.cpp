#include "hopfkit/envelope.hpp"

namespace hopfkit {

void require_antipode(const Bialgebra& h, const Endo& s) {
  const Endo id = Matrix::identity(h.field(), h.dim());
  const Endo unit = conv_unit(h);
  if (!(conv(h, s, id) == unit) || !(conv(h, id, s) == unit)) {
    throw InvariantViolation("antipode fails S*Id = u∘ε = Id*S");
  }
}

QuotientResult Q_of(const OslashSpace& os) {
  const Bialgebra& b = os.source;
  const Subspace& k = os.ker_i;
  if (!(ideal_closure(b, k, Side::left) == k) || !(ideal_closure(b, k, Side::two_sided) == k)) {
    throw InvariantViolation("ker i_B is not a two-sided ideal");
  }
  if (!is_coideal(b, k)) throw InvariantViolation("ker i_B is not a coideal");
  return quotient_by_biideal(b, k);
}

QuotientResult Q_of(const Bialgebra& b) { return Q_of(build_oslash(b)); }

HopfResult hopf_envelope(const OslashSpace& os) {
  const Bialgebra& b = os.source;
  QuotientResult q = Q_of(os);
  auto s = antipode(q.quotient);
  if (!s) throw InvariantViolation("B / ker i_B has no antipode");
  if (!verify_axioms(q.quotient).all_ok()) throw InvariantViolation("B / ker i_B fails the bialgebra axioms");
  require_antipode(q.quotient, *s);

  const Matrix& proj = q.projection.matrix;
  const Matrix transported = proj * S_witness(os);
  if (!(conv_hom(b, q.quotient, proj, transported) == conv_unit_hom(b, q.quotient))) {
    throw InvariantViolation("q∘S is not a right convolution inverse of q");
  }
  if (!(transported == *s * proj)) throw InvariantViolation("q∘S differs from S_H∘q");

  HopfResult r;
  r.hopf = q.quotient;
  r.antipode = std::move(*s);
  r.structure_map = std::move(q.projection);
  r.direction = HopfResult::Direction::quotient;
  r.defining_subspace = os.ker_i;
  return r;
}

HopfResult hopf_envelope(const Bialgebra& b) { return hopf_envelope(build_oslash(b)); }

OslashIsoReport oslash_iso_report(const OslashSpace& os, const HopfResult& envelope) {
  const Bialgebra& b = os.source;
  const Bialgebra& h = envelope.hopf;
  const std::size_t d = b.dim();
  const Matrix& q = envelope.structure_map.matrix;
  const Matrix sq = envelope.antipode * q;

  // φ on B⊗B before passing to the quotient: e_x⊗e_y ↦ q(e_x) S(q(e_y)).
  Matrix lifted(b.field(), h.dim(), d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) lifted.set_column(x * d + y, h.multiply(q.column(x), sq.column(y)));

  OslashIsoReport r;
  r.well_defined = true;
  for (std::size_t w = 0; w < os.relations.dim() && r.well_defined; ++w) {
    r.well_defined = is_zero(lifted.apply(os.relations.basis_vector(w)));
  }
  r.phi = Matrix(b.field(), h.dim(), os.quotient_dim);
  for (std::size_t c = 0; c < os.quotient_dim; ++c) r.phi.set_column(c, lifted.column(os.representatives[c]));
  r.bijective = h.dim() == os.quotient_dim && rank(r.phi) == h.dim();
  r.coalgebra_map = true;
  const std::size_t n = os.quotient_dim;
  for (std::size_t c = 0; c < n && r.coalgebra_map; ++c) {
    const Vector image = r.phi.column(c);
    Vector rhs = zero_vector(b.field(), h.dim() * h.dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& s = os.comult[(c * n + i) * n + j];
        if (!s.is_zero()) axpy(rhs, s, tensor_vectors(r.phi.column(i), r.phi.column(j)));
      }
    r.coalgebra_map = h.coproduct(image) == rhs && h.counit_of(image) == os.counit[c];
  }
  r.compatible_with_i = r.phi * os.i_matrix == q;
  return r;
}

bool oslash_iso_check(const Bialgebra& b) {
  const OslashSpace os = build_oslash(b);
  const OslashIsoReport r = oslash_iso_report(os, hopf_envelope(os));
  if (!r.ok()) throw InvariantViolation("B⊘B is not isomorphic to H(B) via x⊘y ↦ q(x)S(q(y))");
  return true;
}

bool cocommutative_envelope_check(const Bialgebra& b) {
  if (!is_cocommutative(b)) throw PreconditionError("cocommutative_envelope_check: bialgebra is not cocommutative");
  const OslashSpace os = build_oslash(b);
  const HopfResult env = hopf_envelope(os);
  const OslashIsoReport iso = oslash_iso_report(os, env);
  if (!iso.ok()) return false;
  const std::size_t d = b.dim();
  for (std::size_t w = 0; w < os.relations.dim(); ++w) {
    if (!os.relations.contains(flip_tensor(os.relations.basis_vector(w), d))) return false;
  }
  Matrix flip(b.field(), os.quotient_dim, os.quotient_dim);
  for (std::size_t c = 0; c < os.quotient_dim; ++c) {
    const std::size_t rep = os.representatives[c];
    flip.set_column(c, os.projection.column((rep % d) * d + rep / d));
  }
  // φ bijective, so φ∘flip = S∘φ is the transported identity.
  return iso.phi * flip == env.antipode * iso.phi;
}

IterationResult iterate_Q(const Bialgebra& b) {
  IterationResult r{b, 0};
  while (true) {
    const OslashSpace os = build_oslash(r.result);
    if (os.injective) break;
    r.result = Q_of(os).quotient;
    ++r.steps;
    if (r.steps > b.dim()) throw InvariantViolation("iterated Q did not stabilize");
  }
  if (r.steps > 1) throw InvariantViolation("iterated Q needed more than one step");
  if (!r.result.same_structure(hopf_envelope(b).hopf)) {
    throw InvariantViolation("iterated Q differs from the Hopf envelope");
  }
  return r;
}

Factorization factor_through_envelope(const HopfResult& envelope, const Matrix& f, const Bialgebra& target) {
  if (envelope.direction != HopfResult::Direction::quotient) {
    throw PreconditionError("factor_through_envelope: structure map is not a projection");
  }
  const Matrix& q = envelope.structure_map.matrix;
  if (f.cols() != q.cols() || f.rows() != target.dim()) throw DimensionError("factor_through_envelope: shape mismatch");
  // g q = f  ⇔  qᵀ gᵀ = fᵀ, one column of gᵀ per row of f.
  const Matrix qt = q.transpose();
  Matrix g(f.field(), f.rows(), q.rows());
  for (std::size_t r = 0; r < f.rows(); ++r) {
    auto row = solve(qt, f.row(r));
    if (!row) return {};
    g.set_row(r, *row);
  }
  Factorization fac;
  fac.unique = rank(qt) == q.rows();
  fac.bialgebra_map = morphism_check(g, envelope.hopf, target).is_bialgebra_map();
  fac.map = std::move(g);
  return fac;
}

}  // namespace hopfkit
