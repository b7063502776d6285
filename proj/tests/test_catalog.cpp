#include <stdexcept>

#include <gtest/gtest.h>

#include "bvorb/catalog.hpp"
#include "bvorb/reference.hpp"

using bv::K3Class;

namespace {

// Topological Lefschetz number of the automorphism: 2 + trace on H^2.
std::int64_t lefschetz(const K3Class& c) {
  if (c.prime == 2) return 2 + c.r - (22 - c.r);
  return 2 + c.r - (22 - c.r) / (c.prime - 1);
}

std::int64_t fixed_euler(const K3Class& c, bv::LocusReading reading) {
  return bv::euler_characteristic(bv::fixed_curves_polynomial(c, reading)) + bv::fixed_locus(c).point_count();
}

}  // namespace

TEST(Catalog, SupportedPrimes) {
  const auto primes = bv::supported_primes();
  EXPECT_EQ(std::vector<int>(primes.begin(), primes.end()), (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(bv::is_supported_prime(11));
  EXPECT_FALSE(bv::is_supported_prime(23));
  EXPECT_THROW(bv::all_classes(23), std::invalid_argument);
}

TEST(Catalog, Sizes) {
  for (int p : bv::supported_primes())
    EXPECT_EQ(static_cast<std::int64_t>(bv::all_classes(p).size()), bv::reference::published_catalog_size(p)) << p;
}

TEST(Catalog, EveryListedClassValidates) {
  for (int p : bv::supported_primes())
    for (const auto& c : bv::all_classes(p)) EXPECT_TRUE(bv::validate(c)) << p << " " << c.r << " " << c.a;
}

TEST(Catalog, ListsAreSortedAndUnique) {
  for (int p : bv::supported_primes()) {
    const auto& cs = bv::all_classes(p);
    for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LT(cs[i - 1], cs[i]);
  }
}

TEST(Catalog, RejectsInadmissibleClasses) {
  EXPECT_FALSE(bv::validate(K3Class::make(3, 3, 0)));
  EXPECT_FALSE(bv::validate(K3Class::make(5, 22, 0)));
  EXPECT_FALSE(bv::validate(K3Class::make(4, 2, 0)));
  EXPECT_THROW(bv::fixed_locus(K3Class::make(3, 3, 0)), std::invalid_argument);
  EXPECT_FALSE(bv::find_class(3, 2, 9).has_value());
  EXPECT_FALSE(bv::find_class(23, 2, 0).has_value());
  ASSERT_TRUE(bv::find_class(3, 2, 0).has_value());
}

TEST(Catalog, DeltaOnlyForInvolutions) {
  int starred = 0;
  for (const auto& c : bv::all_classes(2)) {
    ASSERT_TRUE(c.delta.has_value());
    if (*c.delta == 0) ++starred;
  }
  EXPECT_EQ(starred, 16);
  for (const auto& c : bv::all_classes(5)) EXPECT_FALSE(c.delta.has_value());
}

TEST(Catalog, SpecialInvolutions) {
  const auto empty = *bv::find_class(2, 10, 10);
  EXPECT_EQ(empty.special, bv::SpecialLocus::EmptyFixedLocus);
  const auto f = bv::fixed_locus(empty);
  EXPECT_EQ(f.genus, 0);
  EXPECT_EQ(f.rational_curves, -1);
  EXPECT_TRUE(f.curve_polynomial().is_zero());

  const auto two = *bv::find_class(2, 10, 8);
  EXPECT_EQ(two.special, bv::SpecialLocus::TwoEllipticCurves);
  EXPECT_EQ(bv::fixed_locus(two).genus, 2);
  EXPECT_EQ(bv::fixed_locus(two).rational_curves, 1);
  EXPECT_EQ(bv::fixed_curves_polynomial(two, bv::LocusReading::GenusFormula),
            bv::fixed_curves_polynomial(two, bv::LocusReading::Geometric));
  EXPECT_EQ(bv::to_string(bv::SpecialLocus::Generic), "generic");
}

TEST(Catalog, KnownProfiles) {
  const auto f = bv::fixed_locus(*bv::find_class(5, 2, 1));
  EXPECT_EQ(f.genus, 2);
  EXPECT_EQ(f.rational_curves, 0);
  EXPECT_EQ(f.point_types, (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(f.lambda, 5);

  const auto g = bv::fixed_locus(*bv::find_class(3, 2, 0));
  EXPECT_EQ(g.genus, 5);
  EXPECT_EQ(g.rational_curves, 1);
  EXPECT_EQ(g.point_count(), 0);
  EXPECT_EQ(g.alpha, -3);

  const auto h = bv::fixed_locus(*bv::find_class(2, 1, 1));
  EXPECT_EQ(h.genus, 10);
  EXPECT_EQ(h.rational_curves, 0);
  EXPECT_TRUE(h.point_types.empty());

  const auto c = bv::fixed_locus(*bv::find_class(5, 2, 1)).curve_polynomial();
  EXPECT_EQ(c(0, 0), 1);
  EXPECT_EQ(c(1, 0), 2);
}

TEST(CatalogProperty, LefschetzFixedPointFormula) {
  for (int p : bv::supported_primes())
    for (const auto& c : bv::all_classes(p))
      EXPECT_EQ(fixed_euler(c, bv::LocusReading::Geometric), lefschetz(c)) << p << " " << c.r << " " << c.a;
}

TEST(CatalogProperty, GenusFormulaReadingOvercountsForLargePrimes) {
  for (int p : bv::supported_primes())
    for (const auto& c : bv::all_classes(p)) {
      const auto excess = fixed_euler(c, bv::LocusReading::GenusFormula) - lefschetz(c);
      EXPECT_EQ(excess, p >= 13 ? 2 : 0) << p << " " << c.r << " " << c.a;
    }
}

TEST(Catalog, GeometricCurvesForLargePrimes) {
  EXPECT_EQ(bv::fixed_curves_polynomial(*bv::find_class(13, 10, 1), bv::LocusReading::Geometric),
            bv::HodgeDiamond(1, {{1, 0}, {0, 1}}));
  EXPECT_TRUE(bv::fixed_curves_polynomial(*bv::find_class(17, 6, 1), bv::LocusReading::Geometric).is_zero());
  EXPECT_TRUE(bv::fixed_curves_polynomial(*bv::find_class(19, 4, 1), bv::LocusReading::Geometric).is_zero());
}

TEST(CatalogProperty, PointTypeVectorShape) {
  for (int p : bv::supported_primes())
    for (const auto& c : bv::all_classes(p)) {
      const auto f = bv::fixed_locus(c);
      EXPECT_EQ(f.point_types.size(), p == 2 ? 0u : static_cast<std::size_t>((p - 1) / 2));
      for (auto n : f.point_types) EXPECT_GE(n, 0);
      EXPECT_GE(f.genus, 0);
      EXPECT_GE(f.rational_curves, -1);
    }
}
