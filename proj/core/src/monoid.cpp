#include "hopfkit/monoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/envelope.hpp"

namespace hopfkit {

MonoidValidation validate(const FiniteMonoid& m) {
  MonoidValidation v;
  auto fail = [&](std::string what, std::vector<std::size_t> witness) {
    v.ok = false;
    v.failure = std::move(what);
    v.witness = std::move(witness);
    return v;
  };
  if (m.size == 0 || m.table.size() != m.size || m.identity >= m.size) return fail("shape", {});
  if (!m.labels.empty() && m.labels.size() != m.size) return fail("shape", {});
  for (std::size_t g = 0; g < m.size; ++g) {
    if (m.table[g].size() != m.size) return fail("shape", {g});
    for (auto h : m.table[g]) {
      if (h >= m.size) return fail("shape", {g});
    }
  }
  for (std::size_t g = 0; g < m.size; ++g) {
    if (m.mul(m.identity, g) != g || m.mul(g, m.identity) != g) return fail("identity", {g});
  }
  for (std::size_t g = 0; g < m.size; ++g)
    for (std::size_t h = 0; h < m.size; ++h)
      for (std::size_t k = 0; k < m.size; ++k) {
        if (m.mul(m.mul(g, h), k) != m.mul(g, m.mul(h, k))) return fail("associativity", {g, h, k});
      }
  return v;
}

void require_monoid(const FiniteMonoid& m) {
  const MonoidValidation v = validate(m);
  if (v.ok) return;
  std::string msg = "monoid table fails " + v.failure;
  if (!v.witness.empty()) {
    msg += " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) msg += (i ? "," : "") + std::to_string(v.witness[i]);
    msg += ")";
  }
  throw VerificationError(msg);
}

FiniteMonoid monogenic(std::size_t index, std::size_t period) {
  if (period == 0) throw PreconditionError("monogenic: period must be at least 1");
  const std::size_t n = index + period;
  auto reduce = [&](std::size_t k) { return k < n ? k : index + (k - index) % period; };
  FiniteMonoid m;
  m.size = n;
  m.identity = 0;
  m.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m.table[a][b] = reduce(a + b);
    m.labels.push_back(a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a));
  }
  require_monoid(m);
  return m;
}

FiniteMonoid cyclic_group(std::size_t order) {
  if (order == 0) throw PreconditionError("cyclic_group: order must be positive");
  FiniteMonoid m = monogenic(0, order);
  if (order > 1) {
    for (std::size_t a = 1; a < order; ++a) m.labels[a] = a == 1 ? "g" : "g^" + std::to_string(a);
  }
  return m;
}

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n) {
  require_monoid(m);
  require_monoid(n);
  FiniteMonoid p;
  p.size = m.size * n.size;
  p.identity = m.identity * n.size + n.identity;
  p.table.assign(p.size, std::vector<std::size_t>(p.size));
  auto label = [](const FiniteMonoid& x, std::size_t i) {
    return x.labels.empty() ? "m" + std::to_string(i) : x.labels[i];
  };
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = 0; b < n.size; ++b) {
      for (std::size_t c = 0; c < m.size; ++c)
        for (std::size_t e = 0; e < n.size; ++e) p.table[a * n.size + b][c * n.size + e] = m.mul(a, c) * n.size + n.mul(b, e);
      p.labels.push_back("(" + label(m, a) + "," + label(n, b) + ")");
    }
  return p;
}

UnitsReport units_and_left_units(const FiniteMonoid& m) {
  require_monoid(m);
  UnitsReport r;
  r.pseudoinverse.assign(m.size, std::nullopt);
  for (std::size_t g = 0; g < m.size; ++g) {
    bool left = false;
    bool unit = false;
    for (std::size_t h = 0; h < m.size; ++h) {
      if (m.mul(g, h) == m.identity) {
        left = true;
        if (m.mul(h, g) == m.identity) unit = true;
      }
      if (!r.pseudoinverse[g] && m.mul(m.mul(g, h), g) == g) r.pseudoinverse[g] = h;
    }
    if (left) r.left_units.push_back(g);
    if (unit) r.units.push_back(g);
    if (r.pseudoinverse[g]) r.regulars.push_back(g);
  }
  if (r.left_units != r.units) throw InvariantViolation("finite monoid with a one-sided unit");
  return r;
}

Bialgebra monoid_bialgebra(const FiniteMonoid& m, Field field) {
  require_monoid(m);
  const std::size_t n = m.size;
  std::vector<Scalar> mult(n * n * n, Scalar::zero(field));
  std::vector<Scalar> comult(n * n * n, Scalar::zero(field));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) mult[(g * n + h) * n + m.mul(g, h)] = Scalar::one(field);
    comult[(g * n + g) * n + g] = Scalar::one(field);
  }
  Vector counit(n, Scalar::one(field));
  std::vector<std::string> labels = m.labels;
  if (labels.empty()) {
    for (std::size_t g = 0; g < n; ++g) labels.push_back("m" + std::to_string(g));
  }
  return Bialgebra(field, n, std::move(mult), std::move(comult), unit_vector(field, n, m.identity),
                   std::move(counit), std::move(labels));
}

CancellativityReport cancellativity_report(const FiniteMonoid& m) {
  require_monoid(m);
  CancellativityReport r;
  r.right_cancellative = true;
  for (std::size_t g = 0; g < m.size && r.right_cancellative; ++g) {
    std::vector<bool> seen(m.size, false);
    for (std::size_t a = 0; a < m.size; ++a) {
      const std::size_t ag = m.mul(a, g);
      if (seen[ag]) {
        r.right_cancellative = false;
        break;
      }
      seen[ag] = true;
    }
  }
  r.unique_right_inverses = true;
  r.is_group = true;
  for (std::size_t g = 0; g < m.size; ++g) {
    std::size_t count = 0;
    for (std::size_t h = 0; h < m.size; ++h) count += m.mul(g, h) == m.identity ? 1 : 0;
    if (count > 1) r.unique_right_inverses = false;
    if (count == 0) r.is_group = false;
  }
  return r;
}

CancellativityReport cancellativity_cross_check(const FiniteMonoid& m, Field field) {
  const CancellativityReport r = cancellativity_report(m);
  const Bialgebra b = monoid_bialgebra(m, field);
  const OslashSpace os = build_oslash(b);
  const BoxslashSpace bs = build_boxslash(b);
  if (r.right_cancellative != os.injective) {
    throw InvariantViolation("right cancellativity disagrees with injectivity of i_B");
  }
  if (r.unique_right_inverses != bs.injective) {
    throw InvariantViolation("uniqueness of right inverses disagrees with injectivity of p_B");
  }
  if (r.is_group != bs.surjective) throw InvariantViolation("group property disagrees with surjectivity of p_B");
  return r;
}

EnvelopingGroup enveloping_group(const FiniteMonoid& m, Field field) {
  const Bialgebra b = monoid_bialgebra(m, field);
  const HopfResult env = hopf_envelope(b);
  const Matrix& q = env.structure_map.matrix;

  EnvelopingGroup g;
  std::vector<Vector> images;
  g.quotient_map.resize(m.size);
  for (std::size_t x = 0; x < m.size; ++x) {
    const Vector v = q.column(x);
    const auto it = std::find(images.begin(), images.end(), v);
    if (it == images.end()) {
      if (!is_grouplike(env.hopf, v)) throw InvariantViolation("image of a monoid element is not group-like");
      g.quotient_map[x] = images.size();
      images.push_back(v);
      g.group.labels.push_back(b.labels()[x]);
    } else {
      g.quotient_map[x] = static_cast<std::size_t>(it - images.begin());
    }
  }
  const std::size_t n = images.size();
  if (n != env.hopf.dim()) throw InvariantViolation("group-like images do not form a basis of H(𝕜M)");
  g.group.size = n;
  g.group.identity = g.quotient_map[m.identity];
  g.group.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector p = env.hopf.multiply(images[i], images[j]);
      const auto it = std::find(images.begin(), images.end(), p);
      if (it == images.end()) throw InvariantViolation("product of group-like images left the image set");
      g.group.table[i][j] = static_cast<std::size_t>(it - images.begin());
    }
  require_monoid(g.group);
  if (!cancellativity_report(g.group).is_group) throw InvariantViolation("enveloping group table is not a group");
  for (std::size_t x = 0; x < m.size; ++x)
    for (std::size_t y = 0; y < m.size; ++y) {
      if (g.quotient_map[m.mul(x, y)] != g.group.mul(g.quotient_map[x], g.quotient_map[y])) {
        throw InvariantViolation("quotient map to the enveloping group is not multiplicative");
      }
    }
  return g;
}

bool is_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b, const std::vector<std::size_t>& map) {
  if (a.size != b.size || map.size() != a.size) return false;
  std::vector<bool> hit(b.size, false);
  for (auto x : map) {
    if (x >= b.size || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t g = 0; g < a.size; ++g)
    for (std::size_t h = 0; h < a.size; ++h) {
      if (map[a.mul(g, h)] != b.mul(map[g], map[h])) return false;
    }
  return true;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size != b.size) return std::nullopt;
  if (a.size > 9) throw PreconditionError("find_isomorphism: brute force limited to 9 elements");
  std::vector<std::size_t> perm(a.size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.identity] == b.identity && is_isomorphism(a, b, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

FiniteMonoid transformation_monoid(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators) {
  if (degree == 0) throw PreconditionError("transformation_monoid: degree must be positive");
  for (const auto& g : generators) {
    if (g.size() != degree) throw PreconditionError("transformation_monoid: generator of the wrong degree");
    for (auto x : g) {
      if (x >= degree) throw PreconditionError("transformation_monoid: generator leaves the set");
    }
  }
  using Map = std::vector<std::size_t>;
  auto compose = [](const Map& f, const Map& g) {
    Map h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) h[x] = g[f[x]];
    return h;
  };
  Map id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Map> elements{id};
  std::map<Map, std::size_t> index{{id, 0}};
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    const std::size_t e = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      Map h = compose(elements[e], g);
      if (index.emplace(h, elements.size()).second) {
        todo.push_back(elements.size());
        elements.push_back(std::move(h));
      }
    }
  }
  FiniteMonoid m;
  m.size = elements.size();
  m.identity = 0;
  m.table.assign(m.size, std::vector<std::size_t>(m.size));
  for (std::size_t a = 0; a < m.size; ++a) {
    for (std::size_t b = 0; b < m.size; ++b) m.table[a][b] = index.at(compose(elements[a], elements[b]));
    std::string label = "[";
    for (std::size_t x = 0; x < degree; ++x) label += (x ? "," : "") + std::to_string(elements[a][x]);
    m.labels.push_back(label + "]");
  }
  require_monoid(m);
  return m;
}

FiniteMonoid random_monoid(std::mt19937_64& rng, std::size_t max_size) {
  if (max_size == 0) throw PreconditionError("random_monoid: max_size must be positive");
  std::uniform_int_distribution<std::size_t> pick_degree(1, 3);
  std::uniform_int_distribution<std::size_t> pick_count(1, 2);
  for (;;) {
    const std::size_t degree = pick_degree(rng);
    std::uniform_int_distribution<std::size_t> pick_point(0, degree - 1);
    std::vector<std::vector<std::size_t>> gens(pick_count(rng), std::vector<std::size_t>(degree));
    for (auto& g : gens)
      for (auto& x : g) x = pick_point(rng);
    FiniteMonoid m = transformation_monoid(degree, gens);
    if (m.size <= max_size) return m;
  }
}

}  // namespace hopfkit
