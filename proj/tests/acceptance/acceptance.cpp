// Prints one "[PASS] ACn" or "[FAIL] ACn" line per acceptance criterion.
// Usage: acceptance <path-to-hopfkit-cli> <fixture-dir>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/convolution.hpp"
#include "hopfkit/envelope.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"
#include "hopfkit/suite.hpp"
#include "oracles.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

std::string cli_path;
std::string fixture_dir;

/// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    std::ostringstream s;
    s << what << " (got " << a << ", want " << b << ")";
    expect(a == b, s.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }
  std::size_t count() const { return count_; }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

Vector e(const Bialgebra& b, std::size_t i) { return unit_vector(b.field(), b.dim(), i); }

Vector combo(const Bialgebra& b, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v = zero_vector(b.field(), b.dim());
  for (const auto& [i, c] : terms) v[i] += Scalar(b.field(), c);
  return v;
}

std::vector<FiniteMonoid> random_monoids(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteMonoid> out;
  for (int i = 0; i < count; ++i) out.push_back(random_monoid(rng, 6));
  return out;
}

struct Run {
  int status = -1;
  std::string output;
};

Run run_cli(const std::string& args, bool merge_stderr) {
  const std::string cmd = "'" + cli_path + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// Basis of the skew plane quotient: 1, x, x², y, xy, x²y.
constexpr std::size_t ONE = 0, X = 1, X2 = 2, Y = 3, XY = 4, X2Y = 5;

void skew_plane(Check& c) {
  const Bialgebra b = quotient_quantum_plane();
  c.equal(b.dim(), 6u, "dim B");
  c.expect(verify_axioms(b).all_ok(), "B passes every axiom");
  const OslashSpace os = build_oslash(b);
  c.equal(os.ker_i.dim(), 2u, "dim ker i");
  c.expect(os.ker_i.contains(combo(b, {{X2, 1}, {ONE, -1}})), "x^2 - 1 in ker i");
  c.equal(os.quotient_dim, 4u, "dim B⊘B");
  const HopfResult h = hopf_envelope(os);
  c.equal(h.hopf.dim(), 4u, "dim H(B)");
  const Vector x = h.structure_map.matrix.column(X);
  c.expect(h.hopf.multiply(x, x) == h.hopf.unit(), "image of x squares to the unit");
  c.expect(antipode_identities(h.hopf, h.antipode), "two-sided antipode on H(B)");
  c.expect(verify_axioms(h.hopf).all_ok(), "H(B) passes every axiom");
  c.expect(h.structure_map.is_bialgebra_map(), "q is a bialgebra map");
  c.equal(cofree_hopf(b).hopf.dim(), 1u, "dim C(B)");
  c.equal(primitives(b).dim(), 0u, "dim of primitives");
}

void n_antipodes(Check& c) {
  const Bialgebra b = quotient_quantum_plane();
  c.equal(minimal_left_n_antipode(b).n, 1u, "left index of the skew plane");
  c.equal(central_n_antipode(b).n, 1u, "central index of the skew plane");
  const Matrix s = Scalar(Q, 2) * Matrix::identity(Q, 6) - conv_power(b, 3);
  c.expect(is_n_antipode(b, s, 1, Side::two_sided), "2·Id − Id^3 is a two-sided 1-antipode");
  c.expect(s.column(X) == e(b, X), "S(x) = x");
  c.expect(s.column(Y) == combo(b, {{Y, 1}, {XY, -1}, {X2Y, -1}}), "S(y) = (1 − x − x²)y");
  c.expect(antipode_shape_check(b, s).anti_algebra, "S is an anti-algebra map");
  for (std::size_t n = 1; n <= 3; ++n) {
    const Bialgebra t = monoid_bialgebra(monogenic(n, 1), Q);
    c.equal(minimal_left_n_antipode(t).n, n, "left index of x^{n+1} = x^n, n = " + std::to_string(n));
    c.equal(central_n_antipode(t).n, n, "central index of x^{n+1} = x^n, n = " + std::to_string(n));
  }
  auto agree = [&](const Bialgebra& x, const std::string& name) {
    const std::size_t l = minimal_left_n_antipode(x).n;
    c.equal(minimal_right_n_antipode(x).n, l, "right vs left index on " + name);
    c.equal(central_n_antipode(x).n, l, "central vs left index on " + name);
  };
  for (const Field f : {Q, F2, F3}) {
    for (const Fixture& fx : builtin_corpus(f)) agree(fx.bialgebra, fx.name + " over " + f.name());
  }
  for (const FiniteMonoid& m : random_monoids(1, 10)) agree(monoid_bialgebra(m, Q), "a random monoid");
}

void periodic_monoid(Check& c) {
  const FiniteMonoid m = monogenic(2, 3);
  const Bialgebra b = monoid_bialgebra(m, Q);
  c.equal(b.dim(), 5u, "dim 𝕜M");
  c.equal(hopf_envelope(b).hopf.dim(), 3u, "dim H(𝕜M)");
  const EnvelopingGroup g = enveloping_group(m);
  c.expect(find_isomorphism(g.group, cyclic_group(3)).has_value(), "G(M) ≅ C3");
  c.equal(cofree_hopf(b).hopf.dim(), 1u, "dim C(𝕜M)");
  std::vector<std::pair<std::string, FiniteMonoid>> groups;
  for (std::size_t n = 1; n <= 6; ++n) groups.emplace_back("C" + std::to_string(n), cyclic_group(n));
  groups.emplace_back("C2×C2", direct_product(cyclic_group(2), cyclic_group(2)));
  groups.emplace_back("C2×C3", direct_product(cyclic_group(2), cyclic_group(3)));
  groups.emplace_back("S3", *builtin_fixture("symmetric-3").monoid);
  for (const auto& [name, grp] : groups) {
    const EnvelopingGroup eg = enveloping_group(grp);
    c.expect(is_isomorphism(grp, eg.group, eg.quotient_map), "G(" + name + ") is " + name + " via the quotient map");
  }
}

void radford(Check& c) {
  const Bialgebra b = radford_dual(2);
  c.equal(b.dim(), 3u, "dim of the dual family member");
  c.expect(conv_power(b, 2) == Matrix::identity(Q, 3), "Id*Id = Id");
  std::vector<Vector> found;
  for (long a0 = -2; a0 <= 2; ++a0)
    for (long a1 = -2; a1 <= 2; ++a1)
      for (long a2 = -2; a2 <= 2; ++a2) {
        const Vector v = combo(b, {{0, a0}, {1, a1}, {2, a2}});
        if (is_grouplike(b, v)) found.push_back(v);
      }
  c.equal(found.size(), 2u, "number of group-likes found by the scan");
  c.expect(std::find(found.begin(), found.end(), b.unit()) != found.end(), "1 is group-like");
  c.expect(std::find(found.begin(), found.end(), combo(b, {{0, 1}, {2, -1}})) != found.end(), "1 − x² is group-like");
  c.equal(hopf_envelope(b).hopf.dim(), 1u, "dim H");
  c.equal(cofree_hopf(b).hopf.dim(), 1u, "dim C");

  const Bialgebra r = radford_adjoin_unit(matrix_coalgebra(2));
  c.equal(r.dim(), 5u, "dim of the adjoin-unit bialgebra");
  c.expect(verify_axioms(r).all_ok(), "adjoin-unit bialgebra passes every axiom");
  c.equal(hopf_envelope(r).hopf.dim(), 1u, "H of adjoin-unit");
  const HopfResult cr = cofree_hopf(r);
  c.equal(cr.hopf.dim(), 1u, "C of adjoin-unit");
  c.expect(cr.structure_map.matrix.column(0) == r.unit(), "C of adjoin-unit is spanned by 1");
  c.equal(central_n_antipode(r).n, 1u, "index of adjoin-unit");
}

void duality(Check& c) {
  for (const Field f : {Q, F2, F3}) {
    for (const Fixture& fx : builtin_corpus(f)) {
      const DualityReport d = duality_report(fx.bialgebra);
      const std::string name = fx.name + " over " + f.name();
      c.equal(d.cofree_dual_dim, d.envelope_dim, "dim C(B*) = dim H(B) on " + name);
      c.expect(d.image_matches, "im qᵀ = K(B*) on " + name);
      c.expect(d.transpose_is_morphism && d.transpose_injective, "qᵀ is an injective bialgebra map on " + name);
    }
  }
  c.equal(duality_report(quotient_quantum_plane()).cofree_dual_dim, 4u, "dim C(B*) for the skew plane");
}

void property_suite(Check& c) {
  auto run = [&](const Bialgebra& b, const std::optional<FiniteMonoid>& m, const std::string& name) {
    const SuiteReport r = run_suite(b, m);
    c.expect(r.ok(), name + ": " + (r.failures.empty() ? std::string() : r.failures.front()));
    c.expect(r.i_surjective && r.p_injective, "i onto and p injective on " + name);
    c.expect(r.frobenius_coincide, "Frobenius flags coincide on " + name);
    c.expect(r.envelope_hopf && r.cofree_hopf, "H and C pass axioms and antipode identities on " + name);
    c.expect(r.q_stable && r.k_stable, "Q and K stabilise in one step on " + name);
    c.expect(r.s_residuals && r.t_identities, "S residuals and T identities on " + name);
    if (m) c.expect(r.monoid_cross_check == std::optional<bool>(true), "table predicates match i/p on " + name);
  };
  for (const Field f : {Q, F2, F3}) {
    for (const Fixture& fx : builtin_corpus(f)) run(fx.bialgebra, fx.monoid, fx.name + " over " + f.name());
    std::size_t k = 0;
    for (const FiniteMonoid& m : random_monoids(6 + f.characteristic(), 20)) {
      run(monoid_bialgebra(m, f), m, "random monoid " + std::to_string(k++) + " over " + f.name());
    }
  }
}

void micro_oracle(Check& c) {
  std::vector<std::pair<std::string, Bialgebra>> all;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t k = 0;
    for (const FiniteMonoid& m : oracle::all_monoids(n)) {
      all.emplace_back("table " + std::to_string(n) + "." + std::to_string(k++), monoid_bialgebra(m, F2));
    }
  }
  for (const Fixture& f : builtin_corpus(F2)) {
    if (f.bialgebra.dim() <= 3) all.emplace_back(f.name, f.bialgebra);
  }
  for (const auto& [name, b] : all) {
    const BoxslashSpace bs = build_boxslash(b);
    c.expect(oracle::subspace_set(bs.subspace) == oracle::gamma_kernel_set(b), "ker γ on " + name);
    const OslashSpace os = build_oslash(b);
    const auto relations = oracle::oslash_relations_set(b);
    c.equal(os.quotient_dim, b.dim() * b.dim() - oracle::dim_of(F2, relations), "dim B⊘B on " + name);
  }
  c.expect(all.size() >= 10, "micro corpus is non-trivial");
}

void cli(Check& c) {
  for (const std::string fmt : {"json", "text"}) {
    const std::string args = "--format " + fmt + " envelope '" + fixture_dir + "/quotient-quantum-plane.json'";
    const Run a = run_cli(args, false);
    const Run b = run_cli(args, false);
    c.equal(a.status, 0, "envelope exit status (" + fmt + ")");
    c.expect(!a.output.empty() && a.output == b.output, "envelope output is byte-identical (" + fmt + ")");
    if (fmt == "json" && a.status == 0) {
      const auto doc = nlohmann::json::parse(a.output);
      c.equal(doc.at("envelope_dim").get<int>(), 4, "reported dim H");
      c.equal(doc.at("ker_i_dim").get<int>(), 2, "reported dim ker i");
      c.expect(doc.at("antipode").get<bool>(), "reported antipode");
    }
  }
  const Run cofree = run_cli("--format json cofree '" + fixture_dir + "/monogenic-2-3.monoid.json'", false);
  c.equal(cofree.status, 0, "cofree exit status");
  if (cofree.status == 0) c.equal(nlohmann::json::parse(cofree.output).at("cofree_dim").get<int>(), 1, "reported dim C");

  for (const std::string cmd : {"verify", "envelope"}) {
    const Run bad = run_cli("--format json " + cmd + " '" + fixture_dir + "/corrupt-coassociativity.json'", false);
    c.equal(bad.status, 2, "corrupt fixture exit status for " + cmd);
    const auto doc = nlohmann::json::parse(bad.output, nullptr, false);
    c.expect(!doc.is_discarded() && doc.value("failed", "") == "coassociativity", "failing axiom named for " + cmd);
    c.expect(!doc.is_discarded() && doc.contains("witness") && !doc["witness"].empty(), "witness reported for " + cmd);
  }
  const Run corpus = run_cli("corpus", true);
  c.equal(corpus.status, 0, "corpus exit status");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <hopfkit-cli> <fixture-dir>\n";
    return 1;
  }
  cli_path = argv[1];
  fixture_dir = argv[2];

  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"skew plane envelope and cofree", skew_plane},
      {"minimal n-antipode indices", n_antipodes},
      {"periodic monoid and enveloping groups", periodic_monoid},
      {"adjoin-unit families", radford},
      {"duality between H(B) and C(B*)", duality},
      {"property suite", property_suite},
      {"exhaustive oracle over GF(2)", micro_oracle},
      {"CLI determinism and exit codes", cli},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    const bool ok = error.empty() && c.failures().empty();
    failed += !ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " AC" << i + 1 << " " << criteria[i].first << " (" << c.count()
              << " checks)\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
