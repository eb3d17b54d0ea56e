#include "hopfkit/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace hopfkit {

namespace {

// Algebra on x^a y^b (a < xs, b < 2, index b*xs + a) with y x = −x y, y² = 0,
// Δx = x⊗x, Δy = x⊗y + y⊗1, ε(x) = 1, ε(y) = 0. reduce folds exponents of x.
Bialgebra skew_plane(Field field, std::size_t xs, const std::function<std::size_t(std::size_t)>& reduce,
                     std::vector<std::string> labels) {
  if (field.characteristic() == 2) throw UnsupportedField("this bialgebra needs characteristic different from 2");
  const std::size_t d = 2 * xs;
  auto idx = [xs](std::size_t a, std::size_t b) { return b * xs + a; };
  std::vector<Scalar> mult(d * d * d, Scalar::zero(field));
  std::vector<Scalar> comult(d * d * d, Scalar::zero(field));
  const Scalar one = Scalar::one(field);
  for (std::size_t a = 0; a < xs; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < xs; ++c)
        for (std::size_t e = 0; e < 2; ++e) {
          if (b + e >= 2) continue;
          // x^a y^b · x^c y^e = (−1)^{bc} x^{a+c} y^{b+e}
          const Scalar sign = (b * c) % 2 == 1 ? -one : one;
          mult[(idx(a, b) * d + idx(c, e)) * d + idx(reduce(a + c), b + e)] = sign;
        }
  Vector counit = zero_vector(field, d);
  for (std::size_t a = 0; a < xs; ++a) {
    comult[(idx(a, 0) * d + idx(a, 0)) * d + idx(a, 0)] = one;
    // Δ(x^a y) = x^{a+1} ⊗ x^a y + x^a y ⊗ x^a
    comult[(idx(a, 1) * d + idx(reduce(a + 1), 0)) * d + idx(a, 1)] += one;
    comult[(idx(a, 1) * d + idx(a, 1)) * d + idx(a, 0)] += one;
    counit[idx(a, 0)] = one;
  }
  return Bialgebra(field, d, std::move(mult), std::move(comult), unit_vector(field, d, 0), std::move(counit),
                   std::move(labels));
}

FiniteMonoid transformation_monoid_2() {
  // Maps f: {0,1} -> {0,1} encoded as (f(0), f(1)); product g·h = g∘h.
  const std::array<std::array<std::size_t, 2>, 4> maps{{{0, 1}, {1, 0}, {0, 0}, {1, 1}}};
  FiniteMonoid m;
  m.size = 4;
  m.identity = 0;
  m.labels = {"id", "swap", "const0", "const1"};
  m.table.assign(4, std::vector<std::size_t>(4));
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) {
      const std::array<std::size_t, 2> comp{maps[g][maps[h][0]], maps[g][maps[h][1]]};
      m.table[g][h] = static_cast<std::size_t>(std::find(maps.begin(), maps.end(), comp) - maps.begin());
    }
  return m;
}

FiniteMonoid symmetric_group_3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteMonoid m;
  m.size = perms.size();
  m.identity = 0;
  m.table.assign(m.size, std::vector<std::size_t>(m.size));
  for (std::size_t g = 0; g < m.size; ++g) {
    std::string label;
    for (auto v : perms[g]) label += std::to_string(v);
    m.labels.push_back(label);
    for (std::size_t h = 0; h < m.size; ++h) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t i = 0; i < 3; ++i) comp[i] = perms[g][perms[h][i]];
      m.table[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  }
  return m;
}

struct Entry {
  std::string name;
  bool needs_odd_characteristic;
  std::function<Fixture(Field)> make;
};

Fixture from_monoid(const std::string& name, const FiniteMonoid& m, Field field) {
  return {name, monoid_bialgebra(m, field), m};
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto monoid_entry = [&e](std::string name, std::function<FiniteMonoid()> make) {
      e.push_back({name, false, [name, make](Field f) { return from_monoid(name, make(), f); }});
    };
    e.push_back({"quotient-quantum-plane", true,
                 [](Field f) { return Fixture{"quotient-quantum-plane", quotient_quantum_plane(f), std::nullopt}; }});
    e.push_back({"quotient-quantum-plane-dual", true, [](Field f) {
                   return Fixture{"quotient-quantum-plane-dual", dual(quotient_quantum_plane(f)), std::nullopt};
                 }});
    e.push_back({"sweedler", true, [](Field f) { return Fixture{"sweedler", sweedler_algebra(f), std::nullopt}; }});
    monoid_entry("trivial", [] { return monogenic(0, 1); });
    monoid_entry("cyclic-2", [] { return cyclic_group(2); });
    monoid_entry("cyclic-3", [] { return cyclic_group(3); });
    monoid_entry("klein-four", [] { return direct_product(cyclic_group(2), cyclic_group(2)); });
    monoid_entry("symmetric-3", [] { return symmetric_group_3(); });
    monoid_entry("monogenic-1-1", [] { return monogenic(1, 1); });
    monoid_entry("monogenic-2-1", [] { return monogenic(2, 1); });
    monoid_entry("monogenic-3-1", [] { return monogenic(3, 1); });
    monoid_entry("monogenic-1-2", [] { return monogenic(1, 2); });
    monoid_entry("monogenic-2-3", [] { return monogenic(2, 3); });
    monoid_entry("monogenic-1-1-times-cyclic-2", [] { return direct_product(monogenic(1, 1), cyclic_group(2)); });
    monoid_entry("transformations-2", [] { return transformation_monoid_2(); });
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::string name = "radford-dual-" + std::to_string(n);
      e.push_back({name, false, [name, n](Field f) { return Fixture{name, radford_dual(n, f), std::nullopt}; }});
    }
    e.push_back({"radford-matrix-2", false, [](Field f) {
                   return Fixture{"radford-matrix-2", radford_adjoin_unit(matrix_coalgebra(2, f)), std::nullopt};
                 }});
    e.push_back({"radford-grouplike-2", false, [](Field f) {
                   return Fixture{"radford-grouplike-2", radford_adjoin_unit(grouplike_coalgebra(2, f)), std::nullopt};
                 }});
    return e;
  }();
  return entries;
}

}  // namespace

Bialgebra quotient_quantum_plane(Field field) {
  // x³ = x: exponents k ≥ 1 fold onto {1, 2}.
  return skew_plane(field, 3, [](std::size_t k) { return k == 0 ? 0 : (k - 1) % 2 + 1; },
                    {"1", "x", "x^2", "y", "xy", "x^2y"});
}

Bialgebra sweedler_algebra(Field field) {
  return skew_plane(field, 2, [](std::size_t k) { return k % 2; }, {"1", "g", "x", "gx"});
}

void require_coalgebra(const Coalgebra& c) {
  if (!is_coalgebra(c.field, c.dim, c.comult, c.counit)) {
    throw PreconditionError("coalgebra data is not coassociative and counital");
  }
}

Coalgebra matrix_coalgebra(std::size_t n, Field field) {
  if (n == 0) throw PreconditionError("matrix_coalgebra: n must be positive");
  Coalgebra c;
  c.field = field;
  c.dim = n * n;
  const std::size_t d = c.dim;
  c.comult.assign(d * d * d, Scalar::zero(field));
  c.counit = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.comult[((i * n + j) * d + (i * n + k)) * d + (k * n + j)] = Scalar::one(field);
      if (i == j) c.counit[i * n + j] = Scalar::one(field);
      c.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return c;
}

Coalgebra grouplike_coalgebra(std::size_t k, Field field) {
  if (k == 0) throw PreconditionError("grouplike_coalgebra: k must be positive");
  Coalgebra c;
  c.field = field;
  c.dim = k;
  c.comult.assign(k * k * k, Scalar::zero(field));
  c.counit.assign(k, Scalar::one(field));
  for (std::size_t i = 0; i < k; ++i) {
    c.comult[(i * k + i) * k + i] = Scalar::one(field);
    c.labels.push_back(k == 1 ? "x" : "x" + std::to_string(i + 1));
  }
  return c;
}

Bialgebra radford_adjoin_unit(const Coalgebra& c) {
  require_coalgebra(c);
  const Field field = c.field;
  const std::size_t n = c.dim;
  const std::size_t d = n + 1;
  std::vector<Scalar> mult(d * d * d, Scalar::zero(field));
  std::vector<Scalar> comult(d * d * d, Scalar::zero(field));
  for (std::size_t i = 0; i < d; ++i) {
    mult[(0 * d + i) * d + i] = Scalar::one(field);
    mult[(i * d + 0) * d + i] = Scalar::one(field);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[((i + 1) * d + (j + 1)) * d + (j + 1)] = c.counit[i];
  comult[0] = Scalar::one(field);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        comult[((k + 1) * d + (i + 1)) * d + (j + 1)] = c.comult[(k * n + i) * n + j];
  Vector counit{Scalar::one(field)};
  counit.insert(counit.end(), c.counit.begin(), c.counit.end());
  std::vector<std::string> labels{"1"};
  if (c.labels.size() == n) {
    labels.insert(labels.end(), c.labels.begin(), c.labels.end());
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  }
  return Bialgebra(field, d, std::move(mult), std::move(comult), unit_vector(field, d, 0), std::move(counit),
                   std::move(labels));
}

Bialgebra radford_dual(std::size_t n, Field field) {
  if (n == 0) throw PreconditionError("radford_dual: n must be at least 1");
  const std::size_t d = n + 1;
  auto reduce = [n](std::size_t k) { return k <= n ? k : (k - 1) % n + 1; };
  std::vector<Scalar> mult(d * d * d, Scalar::zero(field));
  std::vector<Scalar> comult(d * d * d, Scalar::zero(field));
  const Scalar one = Scalar::one(field);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) mult[(a * d + b) * d + reduce(a + b)] = one;
  comult[0] = one;
  for (std::size_t t = 1; t <= n; ++t) {
    // Δ(x^t) = 1⊗x^t + x^t⊗1 − x^t⊗x^n
    comult[(t * d + 0) * d + t] += one;
    comult[(t * d + t) * d + 0] += one;
    comult[(t * d + t) * d + n] -= one;
  }
  std::vector<std::string> labels{"1"};
  for (std::size_t t = 1; t <= n; ++t) labels.push_back(t == 1 ? "x" : "x^" + std::to_string(t));
  return Bialgebra(field, d, std::move(mult), std::move(comult), unit_vector(field, d, 0), unit_vector(field, d, 0),
                   std::move(labels));
}

std::vector<Fixture> builtin_corpus(Field field) {
  std::vector<Fixture> out;
  for (const auto& e : registry()) {
    if (e.needs_odd_characteristic && field.characteristic() == 2) continue;
    out.push_back(e.make(field));
  }
  return out;
}

Fixture builtin_fixture(const std::string& name, Field field) {
  for (const auto& e : registry()) {
    if (e.name == name) return e.make(field);
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

std::vector<std::string> builtin_fixture_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.name);
  return names;
}

}  // namespace hopfkit
