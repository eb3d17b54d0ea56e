#include "hopfkit/cofree.hpp"

namespace hopfkit {

namespace {

HopfResult finish_sub(SubBialgebraResult sub, Subspace subspace) {
  auto s = antipode(sub.sub);
  if (!s) throw InvariantViolation("sub-bialgebra has no antipode");
  if (!verify_axioms(sub.sub).all_ok()) throw InvariantViolation("sub-bialgebra fails the bialgebra axioms");
  require_antipode(sub.sub, *s);
  HopfResult r;
  r.hopf = std::move(sub.sub);
  r.antipode = std::move(*s);
  r.structure_map = std::move(sub.inclusion);
  r.direction = HopfResult::Direction::sub;
  r.defining_subspace = std::move(subspace);
  return r;
}

}  // namespace

SubBialgebraResult K_of(const BoxslashSpace& bs) {
  const Bialgebra& b = bs.source;
  const std::size_t d = b.dim();
  const Matrix proj = bs.im_p.quotient_projection();
  const Matrix id = Matrix::identity(b.field(), d);
  Matrix cond(b.field(), proj.rows() * d, d);
  for (std::size_t k = 0; k < d; ++k) cond.set_column(k, b.apply_tensor(proj, id, b.coproduct_basis(k)));
  const Subspace k = kernel(cond);
  if (!(k == bs.im_p)) throw InvariantViolation("K(B) differs from im p_B");
  try {
    return sub_bialgebra(b, k);
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string("K(B) is not a sub-bialgebra: ") + e.what());
  }
}

SubBialgebraResult K_of(const Bialgebra& b) { return K_of(build_boxslash(b)); }

HopfResult cofree_hopf(const BoxslashSpace& bs) {
  const Bialgebra& b = bs.source;
  SubBialgebraResult sub = K_of(bs);
  if (sub.sub.dim() != bs.dim()) throw InvariantViolation("dim K(B) differs from dim B⊠B");
  HopfResult r = finish_sub(std::move(sub), bs.im_p);

  const Matrix& k = r.structure_map.matrix;
  const Matrix unit = conv_unit_hom(r.hopf, b);
  const Matrix right = T_witness(bs) * k;
  if (!(conv_hom(r.hopf, b, k, right) == unit)) throw InvariantViolation("T∘k is not a right convolution inverse of k");
  const Matrix left = k * r.antipode;
  if (!(conv_hom(r.hopf, b, left, k) == unit) || !(conv_hom(r.hopf, b, k, left) == unit)) {
    throw InvariantViolation("k∘S is not a convolution inverse of k");
  }
  if (!(left == right)) throw InvariantViolation("k∘S differs from T∘k");
  return r;
}

HopfResult cofree_hopf(const Bialgebra& b) { return cofree_hopf(build_boxslash(b)); }

IterationResult iterate_K(const Bialgebra& b) {
  IterationResult r{b, 0};
  while (true) {
    SubBialgebraResult k = K_of(r.result);
    if (k.sub.dim() == r.result.dim()) break;
    r.result = std::move(k.sub);
    ++r.steps;
    if (r.steps > b.dim()) throw InvariantViolation("iterated K did not stabilize");
  }
  if (r.steps > 1) throw InvariantViolation("iterated K needed more than one step");
  if (r.steps == 1 && !r.result.same_structure(cofree_hopf(b).hopf)) {
    throw InvariantViolation("iterated K differs from the cofree Hopf algebra");
  }
  return r;
}

HopfResult cocommutative_cofree(const Bialgebra& b) {
  if (!is_cocommutative(b)) throw PreconditionError("cocommutative_cofree: bialgebra is not cocommutative");
  const std::size_t d = b.dim();
  const BoxslashSpace bs = build_boxslash(b);
  std::vector<Vector> flipped;
  for (std::size_t i = 0; i < bs.dim(); ++i) flipped.push_back(flip_tensor(bs.subspace.basis_vector(i), d));
  const Subspace v = bs.subspace.intersection(Subspace::span(b.field(), d * d, flipped));

  const Bialgebra outer = tensor(b, op(b));
  SubBialgebraResult sub;
  try {
    sub = sub_bialgebra(outer, v);
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string("flip-stable part of B⊠B is not a sub-bialgebra: ") + e.what());
  }
  const std::size_t m = v.dim();
  Matrix flip(b.field(), m, m);
  for (std::size_t i = 0; i < m; ++i) flip.set_column(i, v.coordinates(flip_tensor(v.basis_vector(i), d)));
  require_antipode(sub.sub, flip);
  auto s = antipode(sub.sub);
  if (!s || !(*s == flip)) throw InvariantViolation("antipode of the cocommutative cofree object is not the flip");

  Matrix p(b.field(), d, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector z = v.basis_vector(i);
    Vector col = zero_vector(b.field(), d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        if (!z[x * d + y].is_zero()) col[x] += z[x * d + y] * b.counit()[y];
      }
    p.set_column(i, col);
  }
  BialgebraMorphism structure = morphism_check(p, sub.sub, b);
  if (!structure.is_bialgebra_map()) throw InvariantViolation("p_B restricted to C^c(B) is not a bialgebra map");
  if (!verify_axioms(sub.sub).all_ok()) throw InvariantViolation("C^c(B) fails the bialgebra axioms");

  HopfResult r;
  r.hopf = std::move(sub.sub);
  r.antipode = std::move(flip);
  r.structure_map = std::move(structure);
  r.direction = HopfResult::Direction::sub;
  r.defining_subspace = v;
  return r;
}

DualityReport duality_report(const Bialgebra& b) {
  const HopfResult env = hopf_envelope(b);
  const Bialgebra db = dual(b);
  const HopfResult cof = cofree_hopf(db);
  DualityReport r;
  r.envelope_dim = env.hopf.dim();
  r.cofree_dual_dim = cof.hopf.dim();
  const Matrix qt = env.structure_map.matrix.transpose();
  r.transpose_is_morphism = morphism_check(qt, dual(env.hopf), db).is_bialgebra_map();
  r.transpose_injective = rank(qt) == env.hopf.dim();
  r.image_matches = image(qt) == cof.defining_subspace;
  return r;
}

bool duality_check(const Bialgebra& b) {
  if (!duality_report(b).ok()) throw InvariantViolation("C(B*) is not dual to H(B) via the transpose of q_B");
  return true;
}

}  // namespace hopfkit
