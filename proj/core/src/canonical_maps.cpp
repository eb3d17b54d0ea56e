#include "hopfkit/canonical_maps.hpp"

namespace hopfkit {

namespace {

// (a⊗b)·z = Σ z[x,y] a e_x ⊗ b e_y for basis a, b.
Vector act_on_tensor(const Bialgebra& b, std::size_t a, std::size_t c, const Vector& z) {
  const std::size_t d = b.dim();
  Vector out = zero_vector(b.field(), d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Scalar& zxy = z[x * d + y];
      if (zxy.is_zero()) continue;
      for (const auto& l : b.product_terms(a, x))
        for (const auto& r : b.product_terms(c, y)) out[l.a * d + r.a] += zxy * l.coeff * r.coeff;
    }
  return out;
}

// (ε⊗id)(z) for z ∈ B⊗B.
Vector counit_left(const Bialgebra& b, const Vector& z) {
  const std::size_t d = b.dim();
  Vector out = zero_vector(b.field(), d);
  for (std::size_t x = 0; x < d; ++x) {
    if (b.counit()[x].is_zero()) continue;
    for (std::size_t y = 0; y < d; ++y) {
      if (!z[x * d + y].is_zero()) out[y] += b.counit()[x] * z[x * d + y];
    }
  }
  return out;
}

// Σ z[x,y] x y.
Vector multiply_out(const Bialgebra& b, const Vector& z) {
  const std::size_t d = b.dim();
  Vector out = zero_vector(b.field(), d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (z[x * d + y].is_zero()) continue;
      for (const auto& t : b.product_terms(x, y)) out[t.a] += z[x * d + y] * t.coeff;
    }
  return out;
}

// (π⊗π)Δ̃(z) with Δ̃(x⊗y) = (x₁⊗y₂)⊗(x₂⊗y₁).
Vector quotient_coproduct(const Bialgebra& b, const Matrix& pi, const Vector& z) {
  const std::size_t d = b.dim();
  const std::size_t q = pi.rows();
  Vector out = zero_vector(b.field(), q * q);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Scalar& zxy = z[x * d + y];
      if (zxy.is_zero()) continue;
      for (const auto& s : b.coproduct_terms(x))
        for (const auto& t : b.coproduct_terms(y)) {
          const Scalar c = zxy * s.coeff * t.coeff;
          const std::size_t left = s.a * d + t.b;
          const std::size_t right = s.b * d + t.a;
          for (std::size_t i = 0; i < q; ++i) {
            if (pi(i, left).is_zero()) continue;
            const Scalar ci = c * pi(i, left);
            for (std::size_t j = 0; j < q; ++j) {
              if (!pi(j, right).is_zero()) out[i * q + j] += ci * pi(j, right);
            }
          }
        }
    }
  return out;
}

Vector one_tensor(const Bialgebra& b, std::size_t y) {
  return tensor_vectors(b.unit(), unit_vector(b.field(), b.dim(), y));
}

}  // namespace

Vector OslashSpace::class_of(const Vector& x, const Vector& y) const {
  return projection.apply(tensor_vectors(x, y));
}

Vector OslashSpace::act(const Vector& a, const Vector& b, const Vector& cls) const {
  const std::size_t d = source.dim();
  Vector lifted = zero_vector(source.field(), d * d);
  for (std::size_t c = 0; c < quotient_dim; ++c) {
    if (!cls[c].is_zero()) lifted[representatives[c]] = cls[c];
  }
  Vector out = zero_vector(source.field(), d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b[j].is_zero()) axpy(out, a[i] * b[j], act_on_tensor(source, i, j, lifted));
    }
  }
  return projection.apply(out);
}

Vector OslashSpace::coproduct(const Vector& cls) const {
  const std::size_t q = quotient_dim;
  Vector out = zero_vector(source.field(), q * q);
  for (std::size_t c = 0; c < q; ++c) {
    if (cls[c].is_zero()) continue;
    for (std::size_t i = 0; i < q * q; ++i) {
      if (!comult[c * q * q + i].is_zero()) out[i] += cls[c] * comult[c * q * q + i];
    }
  }
  return out;
}

OslashSpace build_oslash(const Bialgebra& b) {
  const std::size_t d = b.dim();
  const Field field = b.field();
  OslashSpace os;
  os.source = b;

  const Subspace plus = augmentation_ideal(b);
  SpanBuilder span(field, d * d);
  for (std::size_t h = 0; h < plus.dim() && !span.full(); ++h) {
    const Vector dh = b.coproduct(plus.basis_vector(h));
    for (std::size_t a = 0; a < d && !span.full(); ++a)
      for (std::size_t c = 0; c < d && !span.full(); ++c) span.insert(act_on_tensor(b, a, c, dh));
  }
  os.relations = span.build();
  os.representatives = os.relations.complement_indices();
  os.quotient_dim = os.representatives.size();
  os.projection = os.relations.quotient_projection();
  const std::size_t q = os.quotient_dim;

  os.comult.assign(q * q * q, Scalar::zero(field));
  os.counit = zero_vector(field, q);
  for (std::size_t c = 0; c < q; ++c) {
    const std::size_t rep = os.representatives[c];
    const Vector co = quotient_coproduct(b, os.projection, unit_vector(field, d * d, rep));
    for (std::size_t i = 0; i < q * q; ++i) os.comult[c * q * q + i] = co[i];
    os.counit[c] = b.counit()[rep / d] * b.counit()[rep % d];
  }

  for (std::size_t w = 0; w < os.relations.dim(); ++w) {
    const Vector rel = os.relations.basis_vector(w);
    Scalar eps = Scalar::zero(field);
    for (std::size_t i = 0; i < d * d; ++i) {
      if (!rel[i].is_zero()) eps += rel[i] * b.counit()[i / d] * b.counit()[i % d];
    }
    if (!eps.is_zero()) throw InvariantViolation("counit does not vanish on the relations of B⊘B");
    if (!is_zero(quotient_coproduct(b, os.projection, rel))) {
      throw InvariantViolation("comultiplication of B⊘B is not well defined");
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c) {
        if (!os.relations.contains(act_on_tensor(b, a, c, rel))) {
          throw InvariantViolation("left B⊗B-action does not descend to B⊘B");
        }
      }
  }
  if (!is_coalgebra(field, q, os.comult, os.counit)) throw InvariantViolation("B⊘B fails the coalgebra axioms");

  os.i_matrix = Matrix(field, q, d);
  for (std::size_t k = 0; k < d; ++k) {
    os.i_matrix.set_column(k, os.projection.apply(tensor_vectors(unit_vector(field, d, k), b.unit())));
  }
  os.ker_i = kernel(os.i_matrix);
  os.surjective = d - os.ker_i.dim() == q;
  os.injective = os.ker_i.dim() == 0;
  return os;
}

// ---------------------------------------------------------------------------

Matrix gamma_matrix(const Bialgebra& b) {
  const std::size_t d = b.dim();
  Matrix g(b.field(), d * d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const std::size_t col = x * d + y;
      for (const auto& s : b.coproduct_terms(x))
        for (const auto& t : b.coproduct_terms(y)) {
          const Scalar c = s.coeff * t.coeff;
          for (const auto& m : b.product_terms(s.b, t.b)) g((s.a * d + t.a) * d + m.a, col) += c * m.coeff;
        }
      for (std::size_t z = 0; z < d; ++z) {
        if (!b.unit()[z].is_zero()) g((x * d + y) * d + z, col) -= b.unit()[z];
      }
    }
  return g;
}

Vector BoxslashSpace::multiply(const Vector& z, const Vector& w) const {
  const std::size_t m = dim();
  Vector out = zero_vector(source.field(), m);
  for (std::size_t i = 0; i < m; ++i) {
    if (z[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (w[j].is_zero()) continue;
      const Scalar c = z[i] * w[j];
      for (std::size_t k = 0; k < m; ++k) {
        const Scalar& s = mult[(i * m + j) * m + k];
        if (!s.is_zero()) out[k] += c * s;
      }
    }
  }
  return out;
}

BoxslashSpace build_boxslash(const Bialgebra& b) {
  const std::size_t d = b.dim();
  const Field field = b.field();
  BoxslashSpace bs;
  bs.source = b;
  bs.subspace = kernel(gamma_matrix(b));
  const std::size_t m = bs.subspace.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < m; ++i) basis.push_back(bs.subspace.basis_vector(i));
  bs.inclusion = Matrix::from_columns(field, d * d, basis);

  for (const auto& z : basis) {
    Scalar eps = Scalar::zero(field);
    for (std::size_t i = 0; i < d * d; ++i) {
      if (!z[i].is_zero()) eps += z[i] * b.counit()[i / d] * b.counit()[i % d];
    }
    if (!(multiply_out(b, z) == eps * b.unit())) {
      throw InvariantViolation("element of B⊠B with Σ x y ≠ ε(x)ε(y)1");
    }
  }

  const Vector one = tensor_vectors(b.unit(), b.unit());
  if (!bs.subspace.contains(one)) throw InvariantViolation("1⊗1 is not in B⊠B");
  bs.unit = bs.subspace.coordinates(one);

  // (u⊗v)(x⊗y) = ux ⊗ yv
  auto product = [&](const Vector& z, const Vector& w) {
    Vector out = zero_vector(field, d * d);
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v) {
        if (z[u * d + v].is_zero()) continue;
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y) {
            if (w[x * d + y].is_zero()) continue;
            const Scalar c = z[u * d + v] * w[x * d + y];
            for (const auto& l : b.product_terms(u, x))
              for (const auto& r : b.product_terms(y, v)) out[l.a * d + r.a] += c * l.coeff * r.coeff;
          }
      }
    return out;
  };
  bs.mult.assign(m * m * m, Scalar::zero(field));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector p = product(basis[i], basis[j]);
      if (!bs.subspace.contains(p)) throw InvariantViolation("B⊠B is not closed under its product");
      const Vector c = bs.subspace.coordinates(p);
      for (std::size_t k = 0; k < m; ++k) bs.mult[(i * m + j) * m + k] = c[k];
    }
  for (std::size_t i = 0; i < m; ++i) {
    const Vector ei = unit_vector(field, m, i);
    if (!(bs.multiply(bs.unit, ei) == ei) || !(bs.multiply(ei, bs.unit) == ei)) {
      throw InvariantViolation("1⊗1 is not a unit of B⊠B");
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector ej = unit_vector(field, m, j);
        const Vector ek = unit_vector(field, m, k);
        if (!(bs.multiply(bs.multiply(ei, ej), ek) == bs.multiply(ei, bs.multiply(ej, ek)))) {
          throw InvariantViolation("B⊠B product is not associative");
        }
      }
  }

  bs.p_matrix = Matrix(field, d, m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector col = zero_vector(field, d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        if (!basis[i][x * d + y].is_zero()) col[x] += basis[i][x * d + y] * b.counit()[y];
      }
    bs.p_matrix.set_column(i, col);
  }
  bs.im_p = image(bs.p_matrix);
  bs.injective = bs.im_p.dim() == m;
  bs.surjective = bs.im_p.dim() == d;
  return bs;
}

// ---------------------------------------------------------------------------

Endo S_witness(const OslashSpace& os) {
  const Bialgebra& b = os.source;
  const std::size_t d = b.dim();
  Endo s(b.field(), d, d);
  for (std::size_t y = 0; y < d; ++y) {
    const Vector target = os.projection.apply(one_tensor(b, y));
    auto sol = solve(os.i_matrix, target);
    if (!sol) throw InvariantViolation("i_B is not surjective; no section exists");
    s.set_column(y, *sol);
  }
  return s;
}

Endo S_witness(const Bialgebra& b) { return S_witness(build_oslash(b)); }

Endo T_witness(const BoxslashSpace& bs) {
  const Bialgebra& b = bs.source;
  const std::size_t d = b.dim();
  if (!bs.injective) throw InvariantViolation("p_B is not injective; no retraction exists");
  Endo t(b.field(), d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Vector e = unit_vector(b.field(), d, k);
    const Vector w = e - bs.im_p.reduce(e);
    auto pre = solve(bs.p_matrix, w);
    if (!pre) throw InvariantViolation("T_witness: projection onto im p_B left the image");
    t.set_column(k, counit_left(b, bs.inclusion.apply(*pre)));
  }
  return t;
}

Endo T_witness(const Bialgebra& b) { return T_witness(build_boxslash(b)); }

bool s_witness_residuals_in_kernel(const OslashSpace& os, const Endo& s) {
  const Bialgebra& b = os.source;
  const std::size_t d = b.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t c = 0; c < d; ++c) {
      const Vector r = s.apply(b.product(a, c)) - b.multiply(s.column(c), s.column(a));
      if (!is_zero(os.i_matrix.apply(r))) return false;
    }
    Vector r = zero_vector(b.field(), d);
    for (const auto& t : b.coproduct_terms(a)) axpy(r, t.coeff, b.multiply(unit_vector(b.field(), d, t.a), s.column(t.b)));
    r = r - b.counit()[a] * b.unit();
    if (!is_zero(os.i_matrix.apply(r))) return false;
  }
  return true;
}

bool t_witness_identities(const BoxslashSpace& bs, const Endo& t) {
  const Bialgebra& b = bs.source;
  const std::size_t d = b.dim();
  for (std::size_t i = 0; i < bs.dim(); ++i) {
    const Vector z = bs.subspace.basis_vector(i);
    if (!(t.apply(bs.p_matrix.column(i)) == counit_left(b, z))) return false;
  }
  for (std::size_t i = 0; i < bs.im_p.dim(); ++i) {
    const Vector a = bs.im_p.basis_vector(i);
    const Vector co = b.coproduct(a);
    Vector lhs = zero_vector(b.field(), d);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        if (!co[x * d + y].is_zero()) axpy(lhs, co[x * d + y], b.multiply(unit_vector(b.field(), d, x), t.column(y)));
      }
    if (!(lhs == b.counit_of(a) * b.unit())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Matrix can_matrix(const Bialgebra& b) {
  const std::size_t d = b.dim();
  Matrix m(b.field(), d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (const auto& t : b.coproduct_terms(y))
        for (const auto& p : b.product_terms(x, t.a)) m(p.a * d + t.b, x * d + y) += t.coeff * p.coeff;
  return m;
}

Matrix can_prime_matrix(const Bialgebra& b) {
  const std::size_t d = b.dim();
  Matrix m(b.field(), d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (const auto& t : b.coproduct_terms(x))
        for (const auto& p : b.product_terms(t.b, y)) m(t.a * d + p.a, x * d + y) += t.coeff * p.coeff;
  return m;
}

FrobeniusReport frobenius_report(const OslashSpace& os, const BoxslashSpace& bs) {
  const Bialgebra& b = os.source;
  const std::size_t d = b.dim();
  const Endo id = Matrix::identity(b.field(), d);
  FrobeniusReport r;
  r.i_bijective = os.injective && os.surjective;
  r.p_bijective = bs.injective && bs.surjective;
  if (auto s = conv_inverse(b, id, Side::right)) {
    const AntipodeShape shape = antipode_shape_check(b, *s);
    if (shape.anti_algebra && shape.anti_coalgebra) r.right_antipode = *s;
  }
  if (r.i_bijective) {
    Endo s = S_witness(os);
    if (!(conv(b, id, s) == conv_unit(b))) throw InvariantViolation("i_B⁻¹(1⊘y) is not a right antipode");
    r.extracted_right_antipode = std::move(s);
  }
  r.consistent = r.i_bijective == r.p_bijective && r.p_bijective == r.right_antipode.has_value();

  r.can_surjective = rank(can_matrix(b)) == d * d;
  r.can_prime_injective = rank(can_prime_matrix(b)) == d * d;
  if (r.can_surjective && !os.surjective) throw InvariantViolation("can is surjective but i_B is not");
  if (r.can_prime_injective && !bs.injective) throw InvariantViolation("can′ is injective but p_B is not");
  return r;
}

FrobeniusReport frobenius_report(const Bialgebra& b) {
  return frobenius_report(build_oslash(b), build_boxslash(b));
}

// ---------------------------------------------------------------------------

std::optional<QuotientResult> oslash_bialgebra(const OslashSpace& os) {
  const Bialgebra outer = tensor(os.source, cop(os.source));
  if (!(ideal_closure(outer, os.relations, Side::right) == os.relations)) return std::nullopt;
  return quotient_by_biideal(outer, os.relations);
}

std::optional<SubBialgebraResult> boxslash_bialgebra(const BoxslashSpace& bs) {
  const Bialgebra outer = tensor(bs.source, op(bs.source));
  const std::size_t n = outer.dim();
  for (std::size_t i = 0; i < bs.dim(); ++i) {
    const Vector co = outer.coproduct(bs.subspace.basis_vector(i));
    for (std::size_t c = 0; c < n; ++c) {
      Vector col;
      for (std::size_t r = 0; r < n; ++r) col.push_back(co[r * n + c]);
      if (!bs.subspace.contains(col)) return std::nullopt;
    }
  }
  return sub_bialgebra(outer, bs.subspace);
}

std::optional<bool> oslash_flip_antipode(const OslashSpace& os) {
  auto q = oslash_bialgebra(os);
  if (!q) return std::nullopt;
  auto s = antipode(q->quotient);
  if (!s) return std::nullopt;
  const std::size_t d = os.source.dim();
  Matrix flip(os.source.field(), os.quotient_dim, os.quotient_dim);
  for (std::size_t c = 0; c < os.quotient_dim; ++c) {
    const std::size_t rep = os.representatives[c];
    flip.set_column(c, os.projection.column((rep % d) * d + rep / d));
  }
  return flip == *s;
}

std::optional<bool> boxslash_flip_antipode(const BoxslashSpace& bs) {
  auto sub = boxslash_bialgebra(bs);
  if (!sub) return std::nullopt;
  auto s = antipode(sub->sub);
  if (!s) return std::nullopt;
  const std::size_t d = bs.source.dim();
  for (std::size_t i = 0; i < bs.dim(); ++i) {
    const Vector flipped = flip_tensor(bs.subspace.basis_vector(i), d);
    if (!bs.subspace.contains(flipped) || !(bs.subspace.coordinates(flipped) == s->column(i))) return false;
  }
  return true;
}

InducedMap induced_oslash_map(const Matrix& f, const OslashSpace& source, const OslashSpace& target) {
  if (!morphism_check(f, source.source, target.source).is_bialgebra_map()) {
    throw PreconditionError("induced_oslash_map: f is not a bialgebra map");
  }
  const Matrix ff = kronecker(f, f);
  for (std::size_t w = 0; w < source.relations.dim(); ++w) {
    if (!is_zero(target.projection.apply(ff.apply(source.relations.basis_vector(w))))) {
      throw InvariantViolation("f⊗f does not map the relations of B⊘B into those of C⊘C");
    }
  }
  InducedMap m;
  m.matrix = Matrix(f.field(), target.quotient_dim, source.quotient_dim);
  for (std::size_t c = 0; c < source.quotient_dim; ++c) {
    m.matrix.set_column(c, target.projection.apply(ff.column(source.representatives[c])));
  }
  m.commutes = m.matrix * source.i_matrix == target.i_matrix * f;
  m.structure_preserved = true;
  const std::size_t qs = source.quotient_dim;
  const std::size_t qt = target.quotient_dim;
  for (std::size_t c = 0; c < qs && m.structure_preserved; ++c) {
    const Vector image = m.matrix.column(c);
    const Vector lhs = target.coproduct(image);
    Vector rhs = zero_vector(f.field(), qt * qt);
    for (std::size_t i = 0; i < qs; ++i)
      for (std::size_t j = 0; j < qs; ++j) {
        const Scalar& s = source.comult[(c * qs + i) * qs + j];
        if (!s.is_zero()) axpy(rhs, s, tensor_vectors(m.matrix.column(i), m.matrix.column(j)));
      }
    Scalar eps = Scalar::zero(f.field());
    for (std::size_t i = 0; i < qt; ++i) eps += target.counit[i] * image[i];
    m.structure_preserved = lhs == rhs && eps == source.counit[c];
  }
  return m;
}

InducedMap induced_boxslash_map(const Matrix& f, const BoxslashSpace& source, const BoxslashSpace& target) {
  if (!morphism_check(f, source.source, target.source).is_bialgebra_map()) {
    throw PreconditionError("induced_boxslash_map: f is not a bialgebra map");
  }
  const Matrix ff = kronecker(f, f);
  InducedMap m;
  m.matrix = Matrix(f.field(), target.dim(), source.dim());
  for (std::size_t i = 0; i < source.dim(); ++i) {
    const Vector image = ff.apply(source.subspace.basis_vector(i));
    if (!target.subspace.contains(image)) throw InvariantViolation("f⊗f does not map B⊠B into C⊠C");
    m.matrix.set_column(i, target.subspace.coordinates(image));
  }
  m.commutes = target.p_matrix * m.matrix == f * source.p_matrix;
  m.structure_preserved = m.matrix.apply(source.unit) == target.unit;
  for (std::size_t i = 0; i < source.dim() && m.structure_preserved; ++i)
    for (std::size_t j = 0; j < source.dim() && m.structure_preserved; ++j) {
      const Vector ei = unit_vector(f.field(), source.dim(), i);
      const Vector ej = unit_vector(f.field(), source.dim(), j);
      m.structure_preserved = m.matrix.apply(source.multiply(ei, ej)) ==
                              target.multiply(m.matrix.column(i), m.matrix.column(j));
    }
  return m;
}

}  // namespace hopfkit
