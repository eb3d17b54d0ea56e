#include "hopfkit/bialgebra.hpp"

#include <deque>
#include <sstream>

namespace hopfkit {

namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

void record_failure(AxiomCheck& check, std::vector<std::size_t> witness, Vector residual) {
  if (check.ok) {
    check.ok = false;
    check.witness = std::move(witness);
    check.residual = std::move(residual);
  }
  ++check.failures;
}

}  // namespace

Bialgebra::Bialgebra(Field field, std::size_t dim, std::vector<Scalar> mult, std::vector<Scalar> comult,
                     Vector unit, Vector counit, std::vector<std::string> labels)
    : field_(field),
      dim_(dim),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      labels_(std::move(labels)) {
  const std::size_t cube = dim_ * dim_ * dim_;
  if (dim_ == 0) throw StructuralError("bialgebra dimension must be positive");
  if (mult_.size() != cube) throw StructuralError("multiplication tensor must have d^3 entries");
  if (comult_.size() != cube) throw StructuralError("comultiplication tensor must have d^3 entries");
  if (unit_.size() != dim_) throw StructuralError("unit vector must have d entries");
  if (counit_.size() != dim_) throw StructuralError("counit covector must have d entries");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim_) throw StructuralError("labels must have d entries");
  auto check_field = [&](const Scalar& s) {
    if (!(s.field() == field_)) throw FieldMismatch("structure constant over " + s.field().name() +
                                                    " in a bialgebra over " + field_.name());
  };
  for (const auto& s : mult_) check_field(s);
  for (const auto& s : comult_) check_field(s);
  for (const auto& s : unit_) check_field(s);
  for (const auto& s : counit_) check_field(s);

  mult_sparse_.resize(dim_ * dim_);
  comult_sparse_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& m = this->mult(i, j, k);
        if (!m.is_zero()) mult_sparse_[i * dim_ + j].push_back({k, 0, m});
        const Scalar& c = this->comult(i, j, k);
        if (!c.is_zero()) comult_sparse_[i].push_back({j, k, c});
      }
}

Vector Bialgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionError("multiply: length mismatch");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : product_terms(i, j)) out[t.a] += ab * t.coeff;
    }
  }
  return out;
}

Vector Bialgebra::product(std::size_t i, std::size_t j) const {
  Vector out = zero_vector(field_, dim_);
  for (const auto& t : product_terms(i, j)) out[t.a] = t.coeff;
  return out;
}

Vector Bialgebra::coproduct(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("coproduct: length mismatch");
  Vector out = zero_vector(field_, dim_ * dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& t : coproduct_terms(k)) out[t.a * dim_ + t.b] += v[k] * t.coeff;
  }
  return out;
}

Vector Bialgebra::coproduct_basis(std::size_t k) const {
  Vector out = zero_vector(field_, dim_ * dim_);
  for (const auto& t : coproduct_terms(k)) out[t.a * dim_ + t.b] = t.coeff;
  return out;
}

Scalar Bialgebra::counit_of(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("counit_of: length mismatch");
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!v[i].is_zero() && !counit_[i].is_zero()) s += v[i] * counit_[i];
  }
  return s;
}

Vector Bialgebra::multiply_tensor(const Vector& x, const Vector& y) const {
  const std::size_t d = dim_;
  if (x.size() != d * d || y.size() != d * d) throw DimensionError("multiply_tensor: length mismatch");
  Vector out = zero_vector(field_, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar& xij = x[i * d + j];
      if (xij.is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const Scalar& ykl = y[k * d + l];
          if (ykl.is_zero()) continue;
          const Scalar c = xij * ykl;
          for (const auto& left : product_terms(i, k))
            for (const auto& right : product_terms(j, l)) out[left.a * d + right.a] += c * left.coeff * right.coeff;
        }
    }
  return out;
}

Vector Bialgebra::apply_tensor(const Matrix& f, const Matrix& g, const Vector& x) const {
  const std::size_t d = dim_;
  if (x.size() != d * d) throw DimensionError("apply_tensor: length mismatch");
  Vector out = zero_vector(field_, f.rows() * g.rows());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Scalar& xij = x[i * d + j];
      if (xij.is_zero()) continue;
      for (std::size_t a = 0; a < f.rows(); ++a) {
        if (f(a, i).is_zero()) continue;
        const Scalar c = xij * f(a, i);
        for (std::size_t b = 0; b < g.rows(); ++b) {
          if (!g(b, j).is_zero()) out[a * g.rows() + b] += c * g(b, j);
        }
      }
    }
  return out;
}

bool Bialgebra::same_structure(const Bialgebra& other) const {
  return field_ == other.field_ && dim_ == other.dim_ && mult_ == other.mult_ && comult_ == other.comult_ &&
         unit_ == other.unit_ && counit_ == other.counit_;
}

Vector tensor_vectors(const Vector& x, const Vector& y) {
  if (x.empty() || y.empty()) return {};
  Vector out = zero_vector(x.front().field(), x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
    }
  }
  return out;
}

Vector flip_tensor(const Vector& x, std::size_t d) {
  if (x.size() != d * d) throw DimensionError("flip_tensor: length mismatch");
  Vector out = x;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[j * d + i] = x[i * d + j];
  return out;
}

std::string format_combination(const Vector& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coeff = v[i].str();
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const std::string& label = i < labels.size() ? labels[i] : "e" + std::to_string(i);
    if (label == "1") {
      os << coeff;
    } else if (coeff == "1") {
      os << label;
    } else {
      os << coeff << "*" << label;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto* c : checks()) {
    if (!c->ok) return c;
  }
  return nullptr;
}

AxiomReport verify_axioms(const Bialgebra& b) {
  AxiomReport report;
  const std::size_t d = b.dim();
  const Field f = b.field();

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ij = b.product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const Vector lhs = b.multiply(ij, unit_vector(f, d, k));
        const Vector rhs = b.multiply(unit_vector(f, d, i), b.product(j, k));
        if (!(lhs == rhs)) record_failure(report.associativity, {i, j, k}, lhs - rhs);
      }
    }

  for (std::size_t i = 0; i < d; ++i) {
    const Vector e = unit_vector(f, d, i);
    const Vector left = b.multiply(b.unit(), e);
    const Vector right = b.multiply(e, b.unit());
    if (!(left == e)) record_failure(report.unitality, {i, 0}, left - e);
    if (!(right == e)) record_failure(report.unitality, {i, 1}, right - e);
  }

  const Matrix identity = Matrix::identity(f, d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector lhs = zero_vector(f, d * d * d);  // (Δ⊗id)Δ
    Vector rhs = zero_vector(f, d * d * d);  // (id⊗Δ)Δ
    for (const auto& t : b.coproduct_terms(k)) {
      for (const auto& s : b.coproduct_terms(t.a)) lhs[(s.a * d + s.b) * d + t.b] += t.coeff * s.coeff;
      for (const auto& s : b.coproduct_terms(t.b)) rhs[t.a * d * d + s.a * d + s.b] += t.coeff * s.coeff;
    }
    if (!(lhs == rhs)) record_failure(report.coassociativity, {k}, lhs - rhs);

    Vector left = zero_vector(f, d);   // (ε⊗id)Δ
    Vector right = zero_vector(f, d);  // (id⊗ε)Δ
    for (const auto& t : b.coproduct_terms(k)) {
      left[t.b] += b.counit()[t.a] * t.coeff;
      right[t.a] += b.counit()[t.b] * t.coeff;
    }
    const Vector e = unit_vector(f, d, k);
    if (!(left == e)) record_failure(report.counitality, {k, 0}, left - e);
    if (!(right == e)) record_failure(report.counitality, {k, 1}, right - e);
  }

  // Δ(1) = 1⊗1, ε(1) = 1, Δ(e_i e_j) = Δ(e_i)Δ(e_j), ε(e_i e_j) = ε(e_i)ε(e_j).
  {
    const Vector lhs = b.coproduct(b.unit());
    const Vector rhs = tensor_vectors(b.unit(), b.unit());
    if (!(lhs == rhs)) record_failure(report.compatibility, {}, lhs - rhs);
    const Scalar e1 = b.counit_of(b.unit());
    if (!e1.is_one()) record_failure(report.compatibility, {}, Vector{e1 - Scalar::one(f)});
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ij = b.product(i, j);
      const Vector lhs = b.coproduct(ij);
      const Vector rhs = b.multiply_tensor(b.coproduct_basis(i), b.coproduct_basis(j));
      if (!(lhs == rhs)) record_failure(report.compatibility, {i, j}, lhs - rhs);
      const Scalar el = b.counit_of(ij);
      const Scalar er = b.counit()[i] * b.counit()[j];
      if (!(el == er)) record_failure(report.compatibility, {i, j}, Vector{el - er});
    }
  return report;
}

void require_bialgebra(const Bialgebra& b) {
  const AxiomReport r = verify_axioms(b);
  if (const AxiomCheck* c = r.first_failure()) {
    throw VerificationError(c->name + " fails at basis indices " + join_indices(c->witness) +
                            ", residual " + format_combination(c->residual, {}));
  }
}

bool is_coalgebra(Field field, std::size_t q, const std::vector<Scalar>& comult, const Vector& counit) {
  if (comult.size() != q * q * q || counit.size() != q) return false;
  auto delta = [&](std::size_t c, std::size_t i, std::size_t j) -> const Scalar& {
    return comult[(c * q + i) * q + j];
  };
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < q; ++k) {
          Scalar lhs = Scalar::zero(field);
          Scalar rhs = Scalar::zero(field);
          for (std::size_t m = 0; m < q; ++m) {
            lhs += delta(c, m, k) * delta(m, i, j);
            rhs += delta(c, i, m) * delta(m, j, k);
          }
          if (!(lhs == rhs)) return false;
        }
    for (std::size_t i = 0; i < q; ++i) {
      Scalar left = Scalar::zero(field);
      Scalar right = Scalar::zero(field);
      for (std::size_t m = 0; m < q; ++m) {
        left += counit[m] * delta(c, m, i);
        right += delta(c, i, m) * counit[m];
      }
      const Scalar expected = Scalar(field, c == i ? 1 : 0);
      if (!(left == expected) || !(right == expected)) return false;
    }
  }
  return true;
}

bool is_commutative(const Bialgebra& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      if (!(b.product(i, j) == b.product(j, i))) return false;
  return true;
}

bool is_cocommutative(const Bialgebra& b) {
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const Vector c = b.coproduct_basis(k);
    if (!(c == flip_tensor(c, b.dim()))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Bialgebra tensor(const Bialgebra& b, const Bialgebra& c) {
  if (!(b.field() == c.field())) throw FieldMismatch("tensor: bialgebras over different fields");
  const Field f = b.field();
  const std::size_t db = b.dim();
  const std::size_t dc = c.dim();
  const std::size_t d = db * dc;
  std::vector<Scalar> mult(d * d * d, Scalar::zero(f));
  std::vector<Scalar> comult(d * d * d, Scalar::zero(f));
  auto idx = [dc](std::size_t i, std::size_t j) { return i * dc + j; };
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < dc; ++l)
          for (const auto& x : b.product_terms(i, k))
            for (const auto& y : c.product_terms(j, l))
              mult[(idx(i, j) * d + idx(k, l)) * d + idx(x.a, y.a)] += x.coeff * y.coeff;
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      for (const auto& x : b.coproduct_terms(i))
        for (const auto& y : c.coproduct_terms(j))
          comult[(idx(i, j) * d + idx(x.a, y.a)) * d + idx(x.b, y.b)] += x.coeff * y.coeff;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < dc; ++j) labels.push_back(b.labels()[i] + "⊗" + c.labels()[j]);
  return Bialgebra(f, d, std::move(mult), std::move(comult), tensor_vectors(b.unit(), c.unit()),
                   tensor_vectors(b.counit(), c.counit()), std::move(labels));
}

Bialgebra op(const Bialgebra& b) {
  const std::size_t d = b.dim();
  std::vector<Scalar> mult(d * d * d, Scalar::zero(b.field()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = b.mult(j, i, k);
  return Bialgebra(b.field(), d, std::move(mult), b.comult_tensor(), b.unit(), b.counit(), b.labels());
}

Bialgebra cop(const Bialgebra& b) {
  const std::size_t d = b.dim();
  std::vector<Scalar> comult(d * d * d, Scalar::zero(b.field()));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) comult[(k * d + i) * d + j] = b.comult(k, j, i);
  return Bialgebra(b.field(), d, b.mult_tensor(), std::move(comult), b.unit(), b.counit(), b.labels());
}

Bialgebra dual(const Bialgebra& b) {
  const std::size_t d = b.dim();
  std::vector<Scalar> mult(d * d * d, Scalar::zero(b.field()));
  std::vector<Scalar> comult(d * d * d, Scalar::zero(b.field()));
  // (e^i e^j)(e_k) = (e^i ⊗ e^j)(Δ e_k) and Δ(e^k)(e_i ⊗ e_j) = e^k(e_i e_j).
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        mult[(i * d + j) * d + k] = b.comult(k, i, j);
        comult[(k * d + i) * d + j] = b.mult(i, j, k);
      }
  std::vector<std::string> labels;
  for (const auto& l : b.labels()) {
    if (l.size() > 1 && l.back() == '*') {
      labels.push_back(l.substr(0, l.size() - 1));
    } else {
      labels.push_back(l + "*");
    }
  }
  return Bialgebra(b.field(), d, std::move(mult), std::move(comult), b.counit(), b.unit(), std::move(labels));
}

// ---------------------------------------------------------------------------

BialgebraMorphism morphism_check(const Matrix& f, const Bialgebra& source, const Bialgebra& target) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    throw DimensionError("morphism_check: matrix shape does not match source/target dimensions");
  }
  BialgebraMorphism m;
  m.source = std::make_shared<const Bialgebra>(source);
  m.target = std::make_shared<const Bialgebra>(target);
  m.matrix = f;

  bool alg = f.apply(source.unit()) == target.unit();
  for (std::size_t i = 0; alg && i < source.dim(); ++i) {
    const Vector fi = f.column(i);
    for (std::size_t j = 0; alg && j < source.dim(); ++j) {
      alg = f.apply(source.product(i, j)) == target.multiply(fi, f.column(j));
    }
  }
  bool coalg = true;
  for (std::size_t k = 0; coalg && k < source.dim(); ++k) {
    const Vector fk = f.column(k);
    coalg = target.counit_of(fk) == source.counit()[k] &&
            source.apply_tensor(f, f, source.coproduct_basis(k)) == target.coproduct(fk);
  }
  m.algebra_map = alg;
  m.coalgebra_map = coalg;
  return m;
}

Subspace augmentation_ideal(const Bialgebra& b) {
  if (is_zero(b.counit())) throw VerificationError("counit is zero; not a bialgebra");
  Matrix eps(b.field(), 1, b.dim());
  eps.set_row(0, b.counit());
  Subspace plus = kernel(eps);
  if (!(ideal_closure(b, plus, Side::two_sided) == plus)) {
    throw InvariantViolation("augmentation ideal is not a two-sided ideal");
  }
  return plus;
}

Subspace ideal_closure(const Bialgebra& b, const Subspace& v, Side side) {
  const std::size_t d = b.dim();
  if (v.ambient_dim() != d) throw DimensionError("ideal_closure: subspace not inside the bialgebra");
  SpanBuilder span(b.field(), d);
  std::deque<Vector> work;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    span.insert(v.basis_vector(i));
    work.push_back(v.basis_vector(i));
  }
  while (!work.empty() && !span.full()) {
    const Vector w = std::move(work.front());
    work.pop_front();
    for (std::size_t i = 0; i < d; ++i) {
      const Vector e = unit_vector(b.field(), d, i);
      if (side != Side::right) {
        Vector p = b.multiply(e, w);
        if (span.insert(p)) work.push_back(std::move(p));
      }
      if (side != Side::left) {
        Vector p = b.multiply(w, e);
        if (span.insert(p)) work.push_back(std::move(p));
      }
    }
  }
  return span.build();
}

namespace {

// Index of the first basis vector of v whose coproduct leaves V⊗B + B⊗V, or dim().
std::size_t first_non_coideal_vector(const Bialgebra& b, const Subspace& v) {
  const Matrix proj = v.quotient_projection();
  for (std::size_t k = 0; k < v.dim(); ++k) {
    const Vector w = v.basis_vector(k);
    if (!b.counit_of(w).is_zero()) return k;
    if (!is_zero(b.apply_tensor(proj, proj, b.coproduct(w)))) return k;
  }
  return v.dim();
}

}  // namespace

bool is_coideal(const Bialgebra& b, const Subspace& v) {
  if (v.ambient_dim() != b.dim()) throw DimensionError("is_coideal: subspace not inside the bialgebra");
  return first_non_coideal_vector(b, v) == v.dim();
}

QuotientResult quotient_by_biideal(const Bialgebra& b, const Subspace& ideal) {
  if (ideal.ambient_dim() != b.dim()) throw DimensionError("quotient: subspace not inside the bialgebra");
  if (!(ideal_closure(b, ideal, Side::two_sided) == ideal)) {
    throw PreconditionError("quotient: subspace is not a two-sided ideal");
  }
  if (const std::size_t k = first_non_coideal_vector(b, ideal); k != ideal.dim()) {
    throw PreconditionError("quotient: subspace is not a coideal (basis vector " +
                            format_combination(ideal.basis_vector(k), b.labels()) + ")");
  }
  const Field f = b.field();
  const auto reps = ideal.complement_indices();
  const std::size_t q = reps.size();
  const Matrix proj = ideal.quotient_projection();

  std::vector<Scalar> mult(q * q * q, Scalar::zero(f));
  std::vector<Scalar> comult(q * q * q, Scalar::zero(f));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t c = 0; c < q; ++c) {
      const Vector prod = proj.apply(b.product(reps[a], reps[c]));
      for (std::size_t k = 0; k < q; ++k) mult[(a * q + c) * q + k] = prod[k];
    }
    const Vector co = b.apply_tensor(proj, proj, b.coproduct_basis(reps[a]));
    for (std::size_t i = 0; i < q * q; ++i) comult[a * q * q + i] = co[i];
  }
  Vector counit;
  std::vector<std::string> labels;
  for (auto r : reps) {
    counit.push_back(b.counit()[r]);
    labels.push_back(b.labels()[r]);
  }
  Bialgebra quotient(f, q, std::move(mult), std::move(comult), proj.apply(b.unit()), std::move(counit),
                     std::move(labels));
  BialgebraMorphism projection = morphism_check(proj, b, quotient);
  if (!projection.is_bialgebra_map()) throw InvariantViolation("quotient projection is not a bialgebra map");
  return {std::move(quotient), std::move(projection)};
}

SubBialgebraResult sub_bialgebra(const Bialgebra& b, const Subspace& w) {
  const Field f = b.field();
  const std::size_t d = b.dim();
  if (w.ambient_dim() != d) throw DimensionError("sub_bialgebra: subspace not inside the bialgebra");
  if (!w.contains(b.unit())) throw PreconditionError("sub_bialgebra: subspace does not contain the unit");
  const std::size_t n = w.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(w.basis_vector(i));

  std::vector<Scalar> mult(n * n * n, Scalar::zero(f));
  std::vector<Scalar> comult(n * n * n, Scalar::zero(f));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      const Vector prod = b.multiply(basis[a], basis[c]);
      if (!w.contains(prod)) {
        throw PreconditionError("sub_bialgebra: not closed under multiplication (" +
                                format_combination(basis[a], b.labels()) + ") * (" +
                                format_combination(basis[c], b.labels()) + ")");
      }
      const Vector coords = w.coordinates(prod);
      for (std::size_t k = 0; k < n; ++k) mult[(a * n + c) * n + k] = coords[k];
    }
  const auto& piv = w.pivots();
  for (std::size_t k = 0; k < n; ++k) {
    const Vector co = b.coproduct(basis[k]);
    // co ∈ W⊗W iff every row and every column (as vectors of B) lies in W.
    for (std::size_t i = 0; i < d; ++i) {
      Vector row(co.begin() + static_cast<std::ptrdiff_t>(i * d), co.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
      Vector col;
      for (std::size_t j = 0; j < d; ++j) col.push_back(co[j * d + i]);
      if (!w.contains(row) || !w.contains(col)) {
        throw PreconditionError("sub_bialgebra: Δ(" + format_combination(basis[k], b.labels()) +
                                ") is not in W⊗W");
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) comult[(k * n + a) * n + c] = co[piv[a] * d + piv[c]];
  }
  Vector counit;
  std::vector<std::string> labels;
  for (const auto& v : basis) {
    counit.push_back(b.counit_of(v));
    labels.push_back(format_combination(v, b.labels()));
  }
  Bialgebra sub(f, n, std::move(mult), std::move(comult), w.coordinates(b.unit()), std::move(counit),
                std::move(labels));
  Matrix incl = Matrix::from_columns(f, d, basis);
  BialgebraMorphism inclusion = morphism_check(incl, sub, b);
  if (!inclusion.is_bialgebra_map()) throw InvariantViolation("sub-bialgebra inclusion is not a bialgebra map");
  return {std::move(sub), std::move(inclusion)};
}

Subspace primitives(const Bialgebra& b) {
  const std::size_t d = b.dim();
  Matrix sys(b.field(), d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Vector e = unit_vector(b.field(), d, k);
    const Vector col = b.coproduct_basis(k) - tensor_vectors(e, b.unit()) - tensor_vectors(b.unit(), e);
    sys.set_column(k, col);
  }
  return kernel(sys);
}

bool is_grouplike(const Bialgebra& b, const Vector& v) {
  return b.counit_of(v).is_one() && b.coproduct(v) == tensor_vectors(v, v);
}

}  // namespace hopfkit
