#include "hopfkit/convolution.hpp"

namespace hopfkit {

namespace {

void require_shape(const Matrix& f, const Bialgebra& source, const Bialgebra& target, const char* what) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    throw DimensionError(std::string(what) + ": map has shape " + std::to_string(f.rows()) + "x" +
                         std::to_string(f.cols()) + ", expected " + std::to_string(target.dim()) + "x" +
                         std::to_string(source.dim()));
  }
}

// vec(G)[c * rows + r] = G(r, c), i.e. columns stacked.
Vector vec(const Matrix& g) {
  Vector v;
  v.reserve(g.rows() * g.cols());
  for (std::size_t c = 0; c < g.cols(); ++c)
    for (std::size_t r = 0; r < g.rows(); ++r) v.push_back(g(r, c));
  return v;
}

Matrix unvec(const Vector& v, Field field, std::size_t rows, std::size_t cols) {
  Matrix g(field, rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) g(r, c) = v[c * rows + r];
  return g;
}

// Matrix of g ↦ f * g (fixed_left = true) or g ↦ g * f on vec(g).
Matrix multiplication_operator(const Bialgebra& source, const Bialgebra& target, const Matrix& f,
                               bool fixed_left) {
  const std::size_t ds = source.dim();
  const std::size_t dt = target.dim();
  const Field field = source.field();
  Matrix op(field, dt * ds, dt * ds);
  for (std::size_t k = 0; k < ds; ++k) {
    for (const auto& term : source.coproduct_terms(k)) {
      // fixed_left: (f*g)(e_k) ∋ c · f(e_a) · g(e_b); g(e_b) enters through column b.
      const std::size_t fixed_leg = fixed_left ? term.a : term.b;
      const std::size_t free_leg = fixed_left ? term.b : term.a;
      const Vector fv = f.column(fixed_leg);
      if (is_zero(fv)) continue;
      for (std::size_t r = 0; r < dt; ++r) {
        const Vector er = unit_vector(field, dt, r);
        const Vector prod = fixed_left ? target.multiply(fv, er) : target.multiply(er, fv);
        for (std::size_t s = 0; s < dt; ++s) {
          if (!prod[s].is_zero()) op(k * dt + s, free_leg * dt + r) += term.coeff * prod[s];
        }
      }
    }
  }
  return op;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix m(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) m.set_row(r, top.row(r));
  for (std::size_t r = 0; r < bottom.rows(); ++r) m.set_row(top.rows() + r, bottom.row(r));
  return m;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

// Smallest n with a solution of the one-sided n-antipode equation.
NAntipodeResult search_n_antipode(const Bialgebra& b, Side side) {
  const std::size_t d = b.dim();
  const std::size_t bound = d * d + 1;
  Endo power_n = conv_unit(b);
  Endo power_next = Matrix::identity(b.field(), d);
  for (std::size_t n = 0; n <= bound; ++n) {
    // left: S * Id^{n+1} = Id^n, i.e. S ↦ S * P is the operator with P fixed on the right.
    const Matrix op = multiplication_operator(b, b, power_next, side == Side::right);
    if (auto sol = solve(op, vec(power_n))) {
      NAntipodeResult r;
      r.n = n;
      r.s = unvec(*sol, b.field(), d, d);
      r.side = side;
      if (!is_n_antipode(b, r.s, n, side)) throw InvariantViolation("n-antipode solve returned a non-solution");
      return r;
    }
    power_n = power_next;
    power_next = conv(b, power_next, Matrix::identity(b.field(), d));
  }
  throw InvariantViolation("no n-antipode up to the finite-dimensional bound");
}

}  // namespace

Endo conv_unit(const Bialgebra& b) { return conv_unit_hom(b, b); }

Matrix conv_unit_hom(const Bialgebra& source, const Bialgebra& target) {
  Matrix m(source.field(), target.dim(), source.dim());
  for (std::size_t r = 0; r < target.dim(); ++r)
    for (std::size_t c = 0; c < source.dim(); ++c) m(r, c) = target.unit()[r] * source.counit()[c];
  return m;
}

Endo conv(const Bialgebra& b, const Endo& f, const Endo& g) { return conv_hom(b, b, f, g); }

Matrix conv_hom(const Bialgebra& source, const Bialgebra& target, const Matrix& f, const Matrix& g) {
  if (!(source.field() == target.field())) throw FieldMismatch("conv_hom: bialgebras over different fields");
  require_shape(f, source, target, "conv");
  require_shape(g, source, target, "conv");
  Matrix out(source.field(), target.dim(), source.dim());
  for (std::size_t k = 0; k < source.dim(); ++k) {
    Vector col = zero_vector(source.field(), target.dim());
    for (const auto& t : source.coproduct_terms(k)) {
      axpy(col, t.coeff, target.multiply(f.column(t.a), g.column(t.b)));
    }
    out.set_column(k, col);
  }
  return out;
}

Endo conv_power(const Bialgebra& b, const Endo& f, std::size_t k) {
  Endo result = conv_unit(b);
  Endo base = f;
  while (k > 0) {
    if (k & 1U) result = conv(b, result, base);
    k >>= 1U;
    if (k > 0) base = conv(b, base, base);
  }
  return result;
}

Endo conv_power(const Bialgebra& b, std::size_t k) {
  return conv_power(b, Matrix::identity(b.field(), b.dim()), k);
}

std::optional<Matrix> conv_solve_hom(const Bialgebra& source, const Bialgebra& target, const Matrix& f,
                                     const Matrix& rhs, Side side) {
  require_shape(f, source, target, "conv_solve");
  require_shape(rhs, source, target, "conv_solve");
  const Vector v = vec(rhs);
  std::optional<Vector> sol;
  switch (side) {
    case Side::right:
      sol = solve(multiplication_operator(source, target, f, true), v);
      break;
    case Side::left:
      sol = solve(multiplication_operator(source, target, f, false), v);
      break;
    case Side::two_sided:
      sol = solve(stack(multiplication_operator(source, target, f, true),
                        multiplication_operator(source, target, f, false)),
                  concat(v, v));
      break;
  }
  if (!sol) return std::nullopt;
  return unvec(*sol, source.field(), target.dim(), source.dim());
}

std::optional<Matrix> conv_inverse_hom(const Bialgebra& source, const Bialgebra& target, const Matrix& f,
                                       Side side) {
  return conv_solve_hom(source, target, f, conv_unit_hom(source, target), side);
}

std::optional<Endo> conv_inverse(const Bialgebra& b, const Endo& f, Side side) {
  return conv_inverse_hom(b, b, f, side);
}

std::optional<Endo> antipode(const Bialgebra& b) {
  return conv_inverse(b, Matrix::identity(b.field(), b.dim()), Side::two_sided);
}

bool is_n_antipode(const Bialgebra& b, const Endo& s, std::size_t n, Side side) {
  const Endo pn = conv_power(b, n);
  const Endo pn1 = conv(b, pn, Matrix::identity(b.field(), b.dim()));
  const bool left = side == Side::right || conv(b, s, pn1) == pn;
  const bool right = side == Side::left || conv(b, pn1, s) == pn;
  return left && right;
}

NAntipodeResult minimal_left_n_antipode(const Bialgebra& b) { return search_n_antipode(b, Side::left); }

NAntipodeResult minimal_right_n_antipode(const Bialgebra& b) { return search_n_antipode(b, Side::right); }

std::vector<Endo> identity_power_basis(const Bialgebra& b) {
  const std::size_t d = b.dim();
  std::vector<Endo> powers;
  SpanBuilder span(b.field(), d * d);
  Endo p = conv_unit(b);
  const Endo id = Matrix::identity(b.field(), d);
  while (span.insert(vec(p))) {
    powers.push_back(p);
    p = conv(b, p, id);
  }
  return powers;
}

NAntipodeResult central_n_antipode(const Bialgebra& b) {
  const std::size_t d = b.dim();
  const Endo id = Matrix::identity(b.field(), d);
  const std::vector<Endo> basis = identity_power_basis(b);
  const std::size_t r = basis.size();
  // powers[t] = Id^{*t} for every t needed below.
  std::vector<Endo> powers = basis;
  auto power = [&](std::size_t t) -> const Endo& {
    while (powers.size() <= t) powers.push_back(conv(b, powers.back(), id));
    return powers[t];
  };
  const std::size_t bound = d * d + 1;
  for (std::size_t n = 0; n <= bound; ++n) {
    // Σ_t c_t Id^{*(t+n+1)} = Id^{*n} with S = Σ_t c_t Id^{*t}.
    std::vector<Vector> cols;
    for (std::size_t t = 0; t < r; ++t) cols.push_back(vec(power(t + n + 1)));
    const Matrix sys = Matrix::from_columns(b.field(), d * d, cols);
    auto coeffs = solve(sys, vec(power(n)));
    if (!coeffs) continue;
    Endo s(b.field(), d, d);
    for (std::size_t t = 0; t < r; ++t) {
      if (!(*coeffs)[t].is_zero()) s += (*coeffs)[t] * basis[t];
    }
    if (!(conv(b, s, id) == conv(b, id, s))) throw InvariantViolation("element of 𝕜[Id] does not commute with Id");
    if (!is_n_antipode(b, s, n, Side::two_sided)) {
      throw InvariantViolation("central n-antipode fails its defining identities");
    }
    const std::size_t left = minimal_left_n_antipode(b).n;
    const std::size_t right = minimal_right_n_antipode(b).n;
    if (left != n || right != n) {
      throw InvariantViolation("minimal n-antipode indices disagree: left " + std::to_string(left) + ", right " +
                               std::to_string(right) + ", central " + std::to_string(n));
    }
    return {n, std::move(s), Side::two_sided, true};
  }
  throw InvariantViolation("no central n-antipode up to the finite-dimensional bound");
}

AntipodeShape antipode_shape_check(const Bialgebra& b, const Endo& s) {
  const std::size_t d = b.dim();
  AntipodeShape shape;
  shape.anti_algebra = s.apply(b.unit()) == b.unit();
  for (std::size_t i = 0; shape.anti_algebra && i < d; ++i)
    for (std::size_t j = 0; shape.anti_algebra && j < d; ++j) {
      shape.anti_algebra = s.apply(b.product(i, j)) == b.multiply(s.column(j), s.column(i));
    }
  shape.anti_coalgebra = true;
  for (std::size_t k = 0; shape.anti_coalgebra && k < d; ++k) {
    const Vector lhs = b.apply_tensor(s, s, b.coproduct_basis(k));
    const Vector rhs = flip_tensor(b.coproduct(s.column(k)), d);
    shape.anti_coalgebra = lhs == rhs && b.counit_of(s.column(k)) == b.counit()[k];
  }
  return shape;
}

}  // namespace hopfkit
