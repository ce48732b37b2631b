#include "support/examples.hpp"
#include "support/linear_membership.hpp"

#include <dtoric/dring.hpp>
#include <dtoric/error.hpp>

#include <gtest/gtest.h>

using namespace dtoric;
using namespace dtoric::testing;

TEST(Realize, CurveGeneratorStaysInRing) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 8);
  const LatticePoint m{-1, -1};
  EXPECT_FALSE(realize(T, m, expand(g_product(P, m))).escaped());
}

TEST(Realize, BareShiftEscapes) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 8);
  auto act = realize(T, LatticePoint{-1, -1}, ThetaPolynomial::constant(2, 1));
  ASSERT_TRUE(act.escaped());
  EXPECT_NE(std::find(act.escapes.begin(), act.escapes.end(), LatticePoint{1, 0}), act.escapes.end());
}

TEST(Realize, EulerOperatorIsDiagonal) {
  auto P = rnc3();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 5);
  auto act = realize(T, LatticePoint{0, 0}, ThetaPolynomial::variable(2, 0));
  for (const auto& a : T.basis()) {
    TfrElement expected;
    if (a[0] != 0) expected.emplace(a, Rational(a[0]));
    EXPECT_EQ(apply(T, act, a), expected);
  }
}

TEST(Order, MultiplicationHasOrderZero) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 6);
  auto act = realize(T, LatticePoint{1, 1}, ThetaPolynomial::constant(2, 1));
  EXPECT_TRUE(order_check(T, act, 0));
}

TEST(Order, EulerOnLineHasOrderOne) {
  auto P = polynomial_ring(1);
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 6);
  auto act = realize(T, LatticePoint{0}, ThetaPolynomial::variable(1, 0));
  EXPECT_TRUE(order_check(T, act, 1));
  EXPECT_FALSE(order_check(T, act, 0));
}

TEST(Order, CurveGeneratorMatchesDegree) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 8);
  const LatticePoint m{-1, -1};
  auto G = g_product(P, m);
  auto act = realize(T, m, expand(G));
  ASSERT_EQ(G.degree(), 2u);
  EXPECT_TRUE(order_check(T, act, 2));
  EXPECT_FALSE(order_check(T, act, 1));
}

TEST(Order, WindowTooSmall) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 2);
  auto act = realize(T, LatticePoint{0, 0}, ThetaPolynomial::variable(2, 0));
  try {
    order_check(T, act, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
    EXPECT_EQ(std::string(e.what()).rfind("window too small", 0), 0u);
  }
}

TEST(Retract, TwoPointDerivativeFails) {
  SimplicialComplex D(2, {{0}, {1}});
  auto C = sr_to_complex(D);
  auto T = TruncatedAlgebra::complex(C, 6);
  auto dx = sr_operator(D, LatticePoint{0, 0}, LatticePoint{1, 0});
  auto rc = retract_condition_check(C, T, realize(T, dx.degree, dx.symbol), 1);
  EXPECT_FALSE(rc.condition2);
  auto xdx = sr_operator(D, LatticePoint{1, 0}, LatticePoint{1, 0});
  EXPECT_TRUE(retract_condition_check(C, T, realize(T, xdx.degree, xdx.symbol), 1).passed());
}

TEST(Retract, GluedCurvesLift) {
  auto C = glued_curves();
  auto T = TruncatedAlgebra::complex(C, 8);
  auto act = lift_tuple(C, T, pair_tuple({rho_u(-1)}, {delta_u(-1)}), 8);
  EXPECT_TRUE(retract_condition_check(C, T, act, 2).passed());
}

TEST(MapsInto, CurveIdealizerKeepsOmega) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 8);
  auto J = RadicalMonomialIdealSpec::omega(P);
  auto inJ = [&](const LatticePoint& a) { return J.contains(P, a); };
  const LatticePoint m{-1, -1};
  const auto idealizer = idealizer_piece(P, J, m);
  for (const auto& g : idealizer.ideal.generators())
    EXPECT_TRUE(maps_into(T, realize(T, m, g), inJ, inJ));
  // The bare D(R) generator does not preserve omega here.
  EXPECT_FALSE(maps_into(T, realize(T, m, expand(g_product(P, m))), inJ, inJ));
}

TEST(MapsInto, TwistedCubicIntoOmega) {
  auto P = rnc3();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 8);
  auto J = RadicalMonomialIdealSpec::omega(P);
  auto inJ = [&](const LatticePoint& a) { return J.contains(P, a); };
  auto all = [](const LatticePoint&) { return true; };
  const LatticePoint m{-1, -1};
  const auto into = d_into_piece(P, J, m);
  for (const auto& g : into.ideal.generators())
    EXPECT_TRUE(maps_into(T, realize(T, m, g), all, inJ));
  EXPECT_TRUE(maps_into(T, realize(T, LatticePoint{1, 2}, ThetaPolynomial::constant(2, 1)), all, inJ));
}

TEST(MapsInto, QuotientWitnessIsNotIntoJ) {
  auto P = rnc2();
  auto T = TruncatedAlgebra::semigroup(P.monoid(), 8);
  auto J = RadicalMonomialIdealSpec::facet(P, 0);
  auto q = quotient_piece(P, J, LatticePoint{0, 0});
  ASSERT_TRUE(q.witness);
  auto inJ = [&](const LatticePoint& a) { return J.contains(P, a); };
  auto all = [](const LatticePoint&) { return true; };
  EXPECT_TRUE(maps_into(T, realize(T, LatticePoint{0, 0}, *q.witness), inJ, inJ));
  EXPECT_FALSE(maps_into(T, realize(T, LatticePoint{0, 0}, *q.witness), all, inJ));
  EXPECT_FALSE(member_by_linear_algebra(*q.witness, q.denominator.ideal.generators(), 2));
}
