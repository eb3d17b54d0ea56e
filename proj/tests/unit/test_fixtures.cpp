#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hopfkit/envelope.hpp"
#include "hopfkit/cofree.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"

using namespace hopfkit;
using namespace testing_support;

namespace {
const Field Q = Field::rationals();
}

TEST(Fixtures, Dimensions) {
  EXPECT_EQ(quotient_quantum_plane().dim(), 6u);
  EXPECT_EQ(sweedler_algebra().dim(), 4u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(radford_dual(n).dim(), n + 1);
  EXPECT_EQ(radford_adjoin_unit(matrix_coalgebra(2)).dim(), 5u);
  EXPECT_EQ(radford_adjoin_unit(grouplike_coalgebra(3)).dim(), 4u);
}

TEST(Fixtures, CharacteristicTwoIsRejectedWhereNeeded) {
  EXPECT_THROW(quotient_quantum_plane(Field::prime(2)), UnsupportedField);
  EXPECT_THROW(sweedler_algebra(Field::prime(2)), UnsupportedField);
  EXPECT_NO_THROW(quotient_quantum_plane(Field::prime(3)));
  for (const Fixture& f : builtin_corpus(Field::prime(2))) {
    EXPECT_NE(f.name, "quotient-quantum-plane");
    EXPECT_NE(f.name, "sweedler");
  }
}

TEST(Fixtures, CorpusNamesResolve) {
  const auto names = builtin_fixture_names();
  EXPECT_EQ(names.size(), builtin_corpus().size());
  for (const auto& n : names) EXPECT_EQ(builtin_fixture(n).name, n);
  EXPECT_THROW(builtin_fixture("no-such-thing"), PreconditionError);
}

TEST(RadfordDual, IdentitySquaresToItself) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Bialgebra b = radford_dual(n);
    EXPECT_TRUE(verify_axioms(b).all_ok()) << n;
    EXPECT_EQ(conv_power(b, 2), identity_of(b)) << n;
  }
}

TEST(RadfordDual, GrouplikesAreOneAndOneMinusPower) {
  // Scan all 0/±1 combinations for the group-likes of the n = 2 case.
  const Bialgebra b = radford_dual(2);
  std::vector<Vector> found;
  for (long c0 = -1; c0 <= 1; ++c0)
    for (long c1 = -1; c1 <= 1; ++c1)
      for (long c2 = -1; c2 <= 1; ++c2) {
        const Vector v = combo(b, {{0, c0}, {1, c1}, {2, c2}});
        if (is_grouplike(b, v)) found.push_back(v);
      }
  ASSERT_EQ(found.size(), 2u);
  EXPECT_TRUE(std::find(found.begin(), found.end(), b.unit()) != found.end());
  EXPECT_TRUE(std::find(found.begin(), found.end(), combo(b, {{0, 1}, {2, -1}})) != found.end());
}

TEST(RadfordMatrix, BothHopfAlgebrasAreTrivial) {
  const Bialgebra b = radford_adjoin_unit(matrix_coalgebra(2));
  EXPECT_TRUE(verify_axioms(b).all_ok());
  EXPECT_EQ(hopf_envelope(b).hopf.dim(), 1u);
  EXPECT_EQ(cofree_hopf(b).hopf.dim(), 1u);
}

TEST(RadfordGrouplike, OnePointIsTheIdempotentMonoid) {
  const Bialgebra a = radford_adjoin_unit(grouplike_coalgebra(1));
  EXPECT_TRUE(a.same_structure(monoid_bialgebra(monogenic(1, 1), Q)));
}

TEST(Coalgebra, ValidationRejectsBrokenData) {
  EXPECT_NO_THROW(require_coalgebra(matrix_coalgebra(2)));
  Coalgebra c = grouplike_coalgebra(2);
  c.counit[1] = Scalar(Q, 2);
  EXPECT_THROW(require_coalgebra(c), PreconditionError);
  Coalgebra d = grouplike_coalgebra(2);
  d.comult[(1 * 2 + 1) * 2 + 0] = Scalar::one(Q);
  EXPECT_THROW(require_coalgebra(d), PreconditionError);
}

TEST(Sweedler, IsHopfAndDualIsHopf) {
  const Bialgebra h = sweedler_algebra();
  EXPECT_TRUE(antipode(h).has_value());
  EXPECT_TRUE(antipode(dual(h)).has_value());
}
