#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hopfkit/fixtures.hpp"
#include "hopfkit/monoid.hpp"

using namespace hopfkit;
using namespace testing_support;

namespace {

const Field Q = Field::rationals();

Bialgebra group_algebra(std::size_t n) { return monoid_bialgebra(cyclic_group(n), Q); }

/// 𝕜⟨x | x^{n+1} = xⁿ⟩.
Bialgebra idempotent_tail(std::size_t n) { return monoid_bialgebra(monogenic(n, 1), Q); }

}  // namespace

TEST(Convolution, UnitIsNeutral) {
  const Bialgebra b = quotient_quantum_plane();
  const Matrix f = conv_power(b, 2) + Scalar(Q, 3) * identity_of(b);
  EXPECT_EQ(conv(b, f, conv_unit(b)), f);
  EXPECT_EQ(conv(b, conv_unit(b), f), f);
}

TEST(Convolution, SquareOfIdentityOnC2SendsGeneratorToOne) {
  const Bialgebra c2 = group_algebra(2);
  const Matrix sq = conv(c2, identity_of(c2), identity_of(c2));
  EXPECT_EQ(sq.column(1), basis(c2, 0));
}

TEST(Convolution, IdentityPowersOnSkewPlane) {
  const Bialgebra b = quotient_quantum_plane();
  EXPECT_EQ(conv_power(b, 2).column(qqp::y), combo(b, {{qqp::xy, 1}, {qqp::y, 1}}));
  EXPECT_EQ(conv_power(b, 3).column(qqp::y), combo(b, {{qqp::x2y, 1}, {qqp::xy, 1}, {qqp::y, 1}}));
  EXPECT_EQ(conv_power(b, 5).column(qqp::y), combo(b, {{qqp::x2y, 2}, {qqp::xy, 2}, {qqp::y, 1}}));
  EXPECT_EQ(conv_power(b, 3).column(qqp::x), basis(b, qqp::x));
}

TEST(Convolution, PowerZeroIsUnitAndPowersAgreeWithRepeatedProducts) {
  const Bialgebra b = quotient_quantum_plane();
  EXPECT_EQ(conv_power(b, 0), conv_unit(b));
  Matrix acc = conv_unit(b);
  for (std::size_t k = 1; k <= 6; ++k) {
    acc = conv(b, acc, identity_of(b));
    EXPECT_EQ(conv_power(b, k), acc) << k;
  }
}

TEST(Convolution, TailMonoidPowersStabilise) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Bialgebra b = idempotent_tail(n);
    EXPECT_EQ(conv_power(b, n + 1), conv_power(b, n));
    EXPECT_NE(conv_power(b, n), conv_power(b, n - 1));
  }
}

TEST(Convolution, AdjoinedUnitBialgebrasAreIdempotent) {
  for (const Bialgebra& b : {radford_adjoin_unit(matrix_coalgebra(2)), radford_dual(2), radford_dual(3)}) {
    EXPECT_EQ(conv_power(b, 2), identity_of(b));
  }
}

TEST(Antipode, GroupAlgebraInvertsElements) {
  const Bialgebra c3 = group_algebra(3);
  const auto s = antipode(c3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->column(1), basis(c3, 2));
  EXPECT_EQ(s->column(2), basis(c3, 1));
  const Bialgebra c2 = group_algebra(2);
  EXPECT_EQ(*antipode(c2), identity_of(c2));
}

TEST(Antipode, SweedlerAntipode) {
  const Bialgebra h = sweedler_algebra();
  const auto s = antipode(h);
  ASSERT_TRUE(s.has_value());
  // Basis 1, g, x, gx: S(g) = g, S(x) = −gx.
  EXPECT_EQ(s->column(1), basis(h, 1));
  EXPECT_EQ(s->column(2), combo(h, {{3, -1}}));
  const AntipodeShape shape = antipode_shape_check(h, *s);
  EXPECT_TRUE(shape.anti_algebra);
  EXPECT_TRUE(shape.anti_coalgebra);
}

TEST(Antipode, IdempotentMonoidHasNone) {
  const Bialgebra b = idempotent_tail(1);
  EXPECT_FALSE(antipode(b).has_value());
  EXPECT_FALSE(conv_inverse(b, identity_of(b), Side::left).has_value());
  EXPECT_FALSE(conv_inverse(b, identity_of(b), Side::right).has_value());
}

TEST(Antipode, SidedSolvesMeetTheirDefinitions) {
  const Bialgebra b = sweedler_algebra();
  const Matrix f = identity_of(b);
  const auto r = conv_inverse(b, f, Side::right);
  const auto l = conv_inverse(b, f, Side::left);
  ASSERT_TRUE(r && l);
  EXPECT_EQ(conv(b, f, *r), conv_unit(b));
  EXPECT_EQ(conv(b, *l, f), conv_unit(b));
}

TEST(NAntipode, GroupAlgebrasHaveIndexZero) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const Bialgebra b = group_algebra(n);
    const NAntipodeResult r = central_n_antipode(b);
    EXPECT_EQ(r.n, 0u);
    EXPECT_EQ(r.s, *antipode(b));
    EXPECT_EQ(minimal_left_n_antipode(b).n, 0u);
  }
}

TEST(NAntipode, TailMonoidsHaveIndexN) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Bialgebra b = idempotent_tail(n);
    EXPECT_EQ(minimal_left_n_antipode(b).n, n);
    EXPECT_EQ(minimal_right_n_antipode(b).n, n);
    const NAntipodeResult c = central_n_antipode(b);
    EXPECT_EQ(c.n, n);
    EXPECT_TRUE(c.central);
    EXPECT_TRUE(is_n_antipode(b, c.s, n, Side::two_sided));
  }
}

TEST(NAntipode, SkewPlaneWitnessFromTheLiterature) {
  const Bialgebra b = quotient_quantum_plane();
  const Matrix s = skew_plane_witness(b);
  EXPECT_EQ(s.column(qqp::one), basis(b, qqp::one));
  EXPECT_EQ(s.column(qqp::x), basis(b, qqp::x));
  EXPECT_EQ(s.column(qqp::y), combo(b, {{qqp::y, 1}, {qqp::xy, -1}, {qqp::x2y, -1}}));
  EXPECT_EQ(conv(b, s, conv_power(b, 2)), identity_of(b));
  EXPECT_TRUE(is_n_antipode(b, s, 1, Side::two_sided));
  EXPECT_FALSE(is_n_antipode(b, s, 0, Side::left));
  EXPECT_TRUE(antipode_shape_check(b, s).anti_algebra);
}

TEST(NAntipode, SkewPlaneMinimalIndexIsOneEverywhere) {
  const Bialgebra b = quotient_quantum_plane();
  EXPECT_EQ(minimal_left_n_antipode(b).n, 1u);
  EXPECT_EQ(minimal_right_n_antipode(b).n, 1u);
  const NAntipodeResult c = central_n_antipode(b);
  EXPECT_EQ(c.n, 1u);
  EXPECT_EQ(conv(b, c.s, identity_of(b)), conv(b, identity_of(b), c.s));
}

TEST(NAntipode, PeriodicMonoidAcceptsPowerWitness) {
  const Bialgebra b = monoid_bialgebra(monogenic(2, 3), Q);
  EXPECT_EQ(central_n_antipode(b).n, 2u);
  const Matrix s = conv_power(b, 2);
  EXPECT_EQ(conv(b, s, conv_power(b, 3)), conv_power(b, 2));
  EXPECT_TRUE(is_n_antipode(b, s, 2, Side::two_sided));
}

TEST(NAntipode, AdjoinedUnitHasCounitWitness) {
  const Bialgebra b = radford_adjoin_unit(matrix_coalgebra(2));
  EXPECT_EQ(central_n_antipode(b).n, 1u);
  EXPECT_TRUE(is_n_antipode(b, conv_unit(b), 1, Side::two_sided));
}

TEST(NAntipode, LeftRightAndCentralIndicesAgreeOnCorpus) {
  for (const Fixture& f : builtin_corpus()) {
    const std::size_t l = minimal_left_n_antipode(f.bialgebra).n;
    EXPECT_EQ(l, minimal_right_n_antipode(f.bialgebra).n) << f.name;
    EXPECT_EQ(l, central_n_antipode(f.bialgebra).n) << f.name;
  }
}

TEST(NAntipode, IdentityPowerBasisSpansCommutingMaps) {
  const Bialgebra b = quotient_quantum_plane();
  const auto powers = identity_power_basis(b);
  ASSERT_FALSE(powers.empty());
  for (const Matrix& p : powers) EXPECT_EQ(conv(b, p, identity_of(b)), conv(b, identity_of(b), p));
}

TEST(AntipodeShape, CounitCompositeIsBoth) {
  const Bialgebra b = quotient_quantum_plane();
  const AntipodeShape s = antipode_shape_check(b, conv_unit(b));
  EXPECT_TRUE(s.anti_algebra);
  EXPECT_TRUE(s.anti_coalgebra);
  EXPECT_FALSE(antipode_shape_check(b, identity_of(b)).anti_algebra);
}
