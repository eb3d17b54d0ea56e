#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"
#include "hopfkit/suite.hpp"
#include "oracles.hpp"

using namespace hopfkit;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

std::set<oracle::Code> image_set(const SubBialgebraResult& k) {
  const Matrix& inc = k.inclusion.matrix;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < inc.cols(); ++j) cols.push_back(inc.column(j));
  return oracle::span_set(inc.field(), inc.rows(), cols);
}

}  // namespace

TEST(KOf, HopfInputIsWhole) {
  for (const Bialgebra& b : {monoid_bialgebra(cyclic_group(3), Q), sweedler_algebra()}) {
    EXPECT_EQ(K_of(b).sub.dim(), b.dim());
  }
}

TEST(KOf, GoldenDimensions) {
  EXPECT_EQ(K_of(quotient_quantum_plane()).sub.dim(), 1u);
  EXPECT_EQ(K_of(monoid_bialgebra(monogenic(2, 3), Q)).sub.dim(), 1u);
  EXPECT_EQ(K_of(radford_dual(2)).sub.dim(), 1u);
  EXPECT_EQ(K_of(radford_adjoin_unit(matrix_coalgebra(2))).sub.dim(), 1u);
}

TEST(KOf, MatchesImageOfP) {
  for (const Fixture& f : builtin_corpus()) {
    const BoxslashSpace bs = build_boxslash(f.bialgebra);
    const SubBialgebraResult k = K_of(bs);
    EXPECT_EQ(k.sub.dim(), bs.im_p.dim()) << f.name;
    EXPECT_TRUE(k.inclusion.is_bialgebra_map()) << f.name;
  }
}

TEST(KOf, MatchesEnumerationOverGF2) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : oracle::all_monoids(n)) {
      const Bialgebra b = monoid_bialgebra(m, F2);
      EXPECT_EQ(image_set(K_of(b)), oracle::cofree_set(b));
    }
  for (const Fixture& f : builtin_corpus(F2)) {
    if (f.bialgebra.dim() > 3) continue;
    EXPECT_EQ(image_set(K_of(f.bialgebra)), oracle::cofree_set(f.bialgebra)) << f.name;
  }
}

TEST(CofreeHopf, IsHopfWithInjectiveStructureMap) {
  for (const Fixture& f : builtin_corpus()) {
    const HopfResult c = cofree_hopf(f.bialgebra);
    EXPECT_EQ(c.direction, HopfResult::Direction::sub) << f.name;
    EXPECT_TRUE(antipode_identities(c.hopf, c.antipode)) << f.name;
    EXPECT_TRUE(c.structure_map.is_bialgebra_map()) << f.name;
    EXPECT_EQ(rank(c.structure_map.matrix), c.hopf.dim()) << f.name;
  }
}

TEST(CofreeHopf, MonoidAlgebraKeepsItsUnits) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : oracle::all_monoids(n)) {
      EXPECT_EQ(cofree_hopf(monoid_bialgebra(m, Q)).hopf.dim(), oracle::unit_count(m));
    }
  const FiniteMonoid s3 = *builtin_fixture("symmetric-3").monoid;
  EXPECT_EQ(cofree_hopf(monoid_bialgebra(s3, Q)).hopf.dim(), 6u);
}

TEST(IterateK, StepCounts) {
  EXPECT_EQ(iterate_K(monoid_bialgebra(cyclic_group(2), Q)).steps, 0u);
  EXPECT_EQ(iterate_K(sweedler_algebra()).steps, 0u);
  const IterationResult r = iterate_K(quotient_quantum_plane());
  EXPECT_EQ(r.steps, 1u);
  EXPECT_EQ(r.result.dim(), 1u);
  for (const Fixture& f : builtin_corpus()) EXPECT_LE(iterate_K(f.bialgebra).steps, 1u) << f.name;
}

TEST(CocommutativeCofree, CommutativeMonoidsGiveTheirUnits) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FiniteMonoid& m : oracle::all_monoids(n)) {
      const Bialgebra b = monoid_bialgebra(m, Q);
      if (!is_commutative(b)) continue;
      const HopfResult h = cocommutative_cofree(b);
      EXPECT_EQ(h.hopf.dim(), oracle::unit_count(m));
      EXPECT_TRUE(antipode_identities(h.hopf, h.antipode));
    }
  EXPECT_EQ(cocommutative_cofree(monoid_bialgebra(cyclic_group(4), Q)).hopf.dim(), 4u);
  EXPECT_EQ(cocommutative_cofree(monoid_bialgebra(monogenic(2, 3), Q)).hopf.dim(), 1u);
}

TEST(CocommutativeCofree, RejectsNonCocommutativeInput) {
  EXPECT_THROW(cocommutative_cofree(quotient_quantum_plane()), PreconditionError);
}

TEST(Duality, GoldenValues) {
  const DualityReport qqp = duality_report(quotient_quantum_plane());
  EXPECT_TRUE(qqp.ok());
  EXPECT_EQ(qqp.envelope_dim, 4u);
  EXPECT_EQ(qqp.cofree_dual_dim, 4u);
  const DualityReport mono = duality_report(monoid_bialgebra(monogenic(2, 3), Q));
  EXPECT_TRUE(mono.ok());
  EXPECT_EQ(mono.envelope_dim, 3u);
}

TEST(Duality, HoldsAcrossCorpusAndFields) {
  for (const Field f : {Q, F2, Field::prime(3)}) {
    for (const Fixture& fx : builtin_corpus(f)) EXPECT_TRUE(duality_check(fx.bialgebra)) << fx.name << " " << f.name();
  }
}

TEST(Duality, DualOfEnvelopeIsCofreeOfDual) {
  const Bialgebra b = quotient_quantum_plane();
  const HopfResult h = hopf_envelope(b);
  const HopfResult c = cofree_hopf(dual(b));
  EXPECT_EQ(h.hopf.dim(), c.hopf.dim());
  EXPECT_EQ(cofree_hopf(b).hopf.dim(), hopf_envelope(dual(b)).hopf.dim());
}
