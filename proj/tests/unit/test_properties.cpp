#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfkit/canonical_maps.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/envelope.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"
#include "hopfkit/suite.hpp"
#include "oracles.hpp"

using namespace hopfkit;

namespace {

const Field Q = Field::rationals();

std::vector<FiniteMonoid> random_monoids(std::uint64_t seed, int count, std::size_t max_size) {
  std::mt19937_64 rng(seed);
  std::vector<FiniteMonoid> out;
  for (int i = 0; i < count; ++i) out.push_back(random_monoid(rng, max_size));
  return out;
}

/// The same monoid with its elements listed in the order given by `perm`.
FiniteMonoid relabel(const FiniteMonoid& m, const std::vector<std::size_t>& perm) {
  FiniteMonoid r;
  r.size = m.size;
  r.identity = perm[m.identity];
  r.table.assign(m.size, std::vector<std::size_t>(m.size));
  for (std::size_t g = 0; g < m.size; ++g)
    for (std::size_t h = 0; h < m.size; ++h) r.table[perm[g]][perm[h]] = perm[m.mul(g, h)];
  return r;
}

void expect_suite_ok(const SuiteReport& r, const std::string& what) {
  EXPECT_TRUE(r.ok()) << what << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_TRUE(r.axioms) << what;
  EXPECT_TRUE(r.i_surjective && r.p_injective) << what;
  EXPECT_TRUE(r.frobenius_coincide) << what;
  EXPECT_TRUE(r.envelope_hopf && r.cofree_hopf) << what;
  EXPECT_TRUE(r.q_stable && r.k_stable) << what;
  EXPECT_TRUE(r.s_residuals && r.t_identities) << what;
  EXPECT_TRUE(r.duality && r.indices_agree) << what;
  // i is onto B⊘B with kernel ker i, and p embeds B⊠B.
  EXPECT_EQ(r.oslash_dim + r.ker_i_dim, r.dim) << what;
  EXPECT_EQ(r.envelope_dim, r.oslash_dim) << what;
  EXPECT_EQ(r.cofree_dim, r.boxslash_dim) << what;
  EXPECT_LE(r.envelope_dim, r.dim) << what;
  EXPECT_LE(r.cofree_dim, r.dim) << what;
}

}  // namespace

class CorpusSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(CorpusSuite, EveryInvariantHolds) {
  for (const Fixture& f : builtin_corpus(Field::parse(GetParam()))) {
    const SuiteReport r = run_suite(f.bialgebra, f.monoid);
    expect_suite_ok(r, f.name);
    if (f.monoid) {
      EXPECT_EQ(r.monoid_cross_check, std::optional<bool>(true)) << f.name;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, CorpusSuite, ::testing::Values("Q", "F2", "F3"),
                         [](const auto& info) { return info.param; });

TEST(RandomMonoids, SuiteHoldsWithCrossCheck) {
  for (const FiniteMonoid& m : random_monoids(2024, 25, 6)) {
    for (const Field f : {Q, Field::prime(2)}) {
      const SuiteReport r = run_suite(monoid_bialgebra(m, f), m);
      expect_suite_ok(r, "random monoid of size " + std::to_string(m.size));
      EXPECT_EQ(r.monoid_cross_check, std::optional<bool>(true));
      EXPECT_EQ(r.cofree_dim, oracle::unit_count(m));
    }
  }
}

TEST(RandomMonoids, EnvelopingGroupDoesNotDependOnTheField) {
  for (const FiniteMonoid& m : random_monoids(99, 20, 6)) {
    const std::size_t q = enveloping_group(m, Q).group.size;
    EXPECT_EQ(enveloping_group(m, Field::prime(2)).group.size, q);
    EXPECT_EQ(enveloping_group(m, Field::prime(3)).group.size, q);
    EXPECT_EQ(hopf_envelope(monoid_bialgebra(m, Q)).hopf.dim(), q);
  }
}

TEST(RandomMonoids, EnvelopingMapIsAHomomorphismOntoAGroup) {
  for (const FiniteMonoid& m : random_monoids(5, 20, 6)) {
    const EnvelopingGroup e = enveloping_group(m);
    EXPECT_EQ(units_and_left_units(e.group).units.size(), e.group.size);
    for (std::size_t g = 0; g < m.size; ++g)
      for (std::size_t h = 0; h < m.size; ++h)
        EXPECT_EQ(e.quotient_map[m.mul(g, h)], e.group.mul(e.quotient_map[g], e.quotient_map[h]));
    std::vector<bool> hit(e.group.size, false);
    for (auto v : e.quotient_map) hit[v] = true;
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST(Relabelling, DimensionsAreInvariant) {
  std::mt19937_64 rng(17);
  for (const FiniteMonoid& m : random_monoids(31, 12, 6)) {
    std::vector<std::size_t> perm(m.size);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const FiniteMonoid r = relabel(m, perm);
    ASSERT_TRUE(validate(r).ok);
    const Bialgebra a = monoid_bialgebra(m, Q);
    const Bialgebra b = monoid_bialgebra(r, Q);
    EXPECT_EQ(build_oslash(a).quotient_dim, build_oslash(b).quotient_dim);
    EXPECT_EQ(build_boxslash(a).dim(), build_boxslash(b).dim());
    EXPECT_EQ(central_n_antipode(a).n, central_n_antipode(b).n);
  }
}

TEST(Duality, EnvelopeAndCofreeSwapUnderDual) {
  for (const Fixture& f : builtin_corpus()) {
    const Bialgebra d = dual(f.bialgebra);
    EXPECT_EQ(hopf_envelope(f.bialgebra).hopf.dim(), cofree_hopf(d).hopf.dim()) << f.name;
    EXPECT_EQ(cofree_hopf(f.bialgebra).hopf.dim(), hopf_envelope(d).hopf.dim()) << f.name;
  }
}

TEST(Tensor, IndexOfProductIsTheLargerIndex) {
  const std::vector<FiniteMonoid> ms{monogenic(1, 1), monogenic(2, 1), cyclic_group(2), monogenic(1, 2)};
  for (const FiniteMonoid& a : ms)
    for (const FiniteMonoid& b : ms) {
      const std::size_t na = central_n_antipode(monoid_bialgebra(a, Q)).n;
      const std::size_t nb = central_n_antipode(monoid_bialgebra(b, Q)).n;
      const Bialgebra t = monoid_bialgebra(direct_product(a, b), Q);
      EXPECT_EQ(central_n_antipode(t).n, std::max(na, nb));
    }
}

TEST(Idempotence, EnvelopeAndCofreeAreFixedPoints) {
  for (const Fixture& f : builtin_corpus()) {
    const HopfResult h = hopf_envelope(f.bialgebra);
    EXPECT_EQ(hopf_envelope(h.hopf).hopf.dim(), h.hopf.dim()) << f.name;
    const HopfResult c = cofree_hopf(f.bialgebra);
    EXPECT_EQ(cofree_hopf(c.hopf).hopf.dim(), c.hopf.dim()) << f.name;
  }
}
