#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bvorb/arith.hpp"
#include "bvorb/hodge.hpp"

using bv::HodgeDiamond;

namespace {

HodgeDiamond k3() { return HodgeDiamond(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}); }
HodgeDiamond curve(int g) { return HodgeDiamond(1, {{1, g}, {g, 1}}); }

HodgeDiamond random_diamond(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> coef(-9, 9);
  HodgeDiamond h(dim);
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j) h.at(i, j) = coef(rng);
  return h;
}

}  // namespace

TEST(Hodge, ConstructionAndAccess) {
  const HodgeDiamond h = k3();
  EXPECT_EQ(h.dim(), 2);
  EXPECT_EQ(h(1, 1), 20);
  EXPECT_EQ(h(3, 0), 0);
  EXPECT_EQ(h(-1, 0), 0);
  EXPECT_EQ(h.degree(), 2);
  EXPECT_EQ(h.coefficient_sum(), 24);
  EXPECT_TRUE(HodgeDiamond(3).is_zero());
  EXPECT_EQ(HodgeDiamond::one(4)(0, 0), 1);
  EXPECT_EQ(HodgeDiamond::monomial(2, 1, 2, 5)(1, 2), 5);
}

TEST(Hodge, RejectsBadShapes) {
  EXPECT_THROW(HodgeDiamond(5), std::invalid_argument);
  EXPECT_THROW(HodgeDiamond(-1), std::invalid_argument);
  EXPECT_THROW(HodgeDiamond(1, {{1, 0}}), std::invalid_argument);
  EXPECT_THROW(HodgeDiamond(1, {{1, 0, 0}, {0, 1, 0}}), std::invalid_argument);
  HodgeDiamond h(2);
  EXPECT_THROW(h.at(3, 0), std::out_of_range);
  EXPECT_THROW(HodgeDiamond(2) + HodgeDiamond(3), std::invalid_argument);
}

TEST(Hodge, KunnethOfTwoK3Surfaces) {
  const HodgeDiamond x = k3() * k3();
  EXPECT_EQ(x.dim(), 4);
  EXPECT_EQ(x(2, 2), 404);
  EXPECT_EQ(x(1, 1), 40);
  EXPECT_EQ(x(3, 1), 40);
  EXPECT_EQ(x(4, 0), 1);
  EXPECT_EQ(bv::euler_characteristic(x), 576);
  EXPECT_TRUE(x.has_hodge_symmetry());
  EXPECT_TRUE(x.has_poincare_duality());
}

TEST(Hodge, ProductOfCurves) {
  const HodgeDiamond s = curve(2) * curve(3);
  EXPECT_EQ(s(1, 0), 5);
  EXPECT_EQ(s(1, 1), 2 + 2 * 2 * 3);
  EXPECT_EQ(bv::euler_characteristic(s), (2 - 4) * (2 - 6));
}

TEST(Hodge, ProductDimensionLimit) {
  EXPECT_THROW(k3() * HodgeDiamond(3), std::invalid_argument);
  EXPECT_NO_THROW(k3() * k3());
}

TEST(Hodge, Shift) {
  const HodgeDiamond p = HodgeDiamond::one(4);
  const HodgeDiamond s = bv::shift(p, 2);
  EXPECT_EQ(s(2, 2), 1);
  EXPECT_EQ(s(0, 0), 0);
  EXPECT_EQ(bv::shift(p, 0), p);
  EXPECT_THROW(bv::shift(p, 5), std::out_of_range);
  EXPECT_THROW(bv::shift(p, -1), std::invalid_argument);
  EXPECT_THROW(bv::shift(k3().lifted(4), 3), std::out_of_range);
}

TEST(Hodge, ScaleExact) {
  const HodgeDiamond h = bv::scale_exact(k3(), 4, 2);
  EXPECT_EQ(h(1, 1), 40);
  EXPECT_EQ(h(0, 0), 2);
  EXPECT_THROW(bv::scale_exact(k3(), 3, 2), std::domain_error);
  EXPECT_THROW(bv::scale_exact(k3(), 1, 0), std::invalid_argument);
}

TEST(Hodge, LiftedKeepsCoefficients) {
  const HodgeDiamond h = k3().lifted(4);
  EXPECT_EQ(h.dim(), 4);
  EXPECT_EQ(h(1, 1), 20);
  EXPECT_EQ(h(2, 2), 1);
  EXPECT_THROW(h.lifted(1), std::out_of_range);
}

TEST(Hodge, MirrorReflectIsAnInvolution) {
  const HodgeDiamond x = k3() * k3();
  const HodgeDiamond m = bv::mirror_reflect(x);
  EXPECT_EQ(m(3, 1), x(1, 1));
  EXPECT_EQ(bv::mirror_reflect(m), x);
}

TEST(Hodge, SymmetryPredicates) {
  HodgeDiamond h = k3();
  h.at(1, 0) = 1;
  EXPECT_FALSE(h.has_hodge_symmetry());
  h.at(0, 1) = 1;
  EXPECT_TRUE(h.has_hodge_symmetry());
  EXPECT_FALSE(h.has_poincare_duality());
  h.at(2, 1) = 1;
  h.at(1, 2) = 1;
  EXPECT_TRUE(h.has_poincare_duality());
  h.at(1, 1) = -1;
  EXPECT_FALSE(h.is_nonnegative());
}

TEST(Hodge, ToString) { EXPECT_EQ(k3().to_string(), "[1 0 1; 0 20 0; 1 0 1]"); }

TEST(Hodge, OrderingIsTotal) {
  EXPECT_LT(HodgeDiamond::one(2), k3());
  EXPECT_EQ(k3(), k3());
}

TEST(HodgeProperty, EulerCharacteristicIsMultiplicative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> d(0, 2);
    const HodgeDiamond a = random_diamond(rng, d(rng));
    const HodgeDiamond b = random_diamond(rng, d(rng));
    EXPECT_EQ(bv::euler_characteristic(a * b), bv::euler_characteristic(a) * bv::euler_characteristic(b));
  }
}

TEST(HodgeProperty, ProductIsCommutativeAndDistributive) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const HodgeDiamond a = random_diamond(rng, 2);
    const HodgeDiamond b = random_diamond(rng, 2);
    const HodgeDiamond c = random_diamond(rng, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(HodgeProperty, ShiftMultipliesEulerBySignOfSquare) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const HodgeDiamond a = random_diamond(rng, 2).lifted(4);
    EXPECT_EQ(bv::euler_characteristic(bv::shift(a, 1)), bv::euler_characteristic(a));
    EXPECT_EQ(bv::shift(bv::shift(a, 1), 1), bv::shift(a, 2));
  }
}

TEST(Arith, CheckedOverflow) {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(bv::checked_add(big, 1), std::overflow_error);
  EXPECT_THROW(bv::checked_sub(-big - 1, 1), std::overflow_error);
  EXPECT_THROW(bv::checked_mul(big, 2), std::overflow_error);
  EXPECT_EQ(bv::checked_mul(-3, 4), -12);
}

TEST(Arith, Fraction) {
  using bv::Fraction;
  EXPECT_EQ(Fraction(2, 4), Fraction(1, 2));
  EXPECT_EQ(Fraction(1, -2).num(), -1);
  EXPECT_EQ(Fraction(1, 3) + Fraction(2, 3), Fraction(1));
  EXPECT_EQ(Fraction(3, 4) * Fraction(2, 9), Fraction(1, 6));
  EXPECT_LT(Fraction(1, 3), Fraction(1, 2));
  EXPECT_TRUE(Fraction(6, 3).is_integer());
  EXPECT_EQ(Fraction(6, 3).to_integer(), 2);
  EXPECT_THROW(Fraction(1, 3).to_integer(), std::domain_error);
  EXPECT_THROW(Fraction(1, 0), std::domain_error);
}
