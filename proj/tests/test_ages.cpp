#include <stdexcept>

#include <gtest/gtest.h>

#include "bvorb/ages.hpp"
#include "bvorb/catalog.hpp"
#include "bvorb/reference.hpp"

using bv::Fraction;
using bv::LocalWeights;

TEST(Ages, LocalWeightsReduceModP) {
  const LocalWeights w(5, {6, -1, 0});
  EXPECT_EQ(std::vector<int>(w.exponents().begin(), w.exponents().end()), (std::vector<int>{1, 4, 0}));
  EXPECT_EQ(w.codimension(), 2);
  EXPECT_THROW(LocalWeights(5, {1, 1}), std::invalid_argument);
  EXPECT_THROW(LocalWeights(1, {0}), std::invalid_argument);
}

TEST(Ages, ProductPointWeights) {
  const LocalWeights w = LocalWeights::product_point(7, 2, 3);
  EXPECT_EQ(std::vector<int>(w.exponents().begin(), w.exponents().end()), (std::vector<int>{3, 5, 3, 3}));
  EXPECT_EQ(w.codimension(), 4);
}

TEST(Ages, KnownAges) {
  const LocalWeights w(3, {1, 1, 1});
  EXPECT_EQ(bv::age(w, 1), Fraction(1));
  EXPECT_EQ(bv::age(w, 2), Fraction(2));
  EXPECT_EQ(bv::age(LocalWeights(2, {1, 1}), 1), Fraction(1));
  EXPECT_THROW(bv::age(w, 3), std::invalid_argument);
  EXPECT_THROW(bv::age(w, 0), std::invalid_argument);
}

TEST(AgesProperty, InversePairing) {
  for (int p : bv::supported_primes()) {
    if (p == 2) continue;
    const int m = (p - 1) / 2;
    for (int q1 = 1; q1 <= m; ++q1)
      for (int q2 = 1; q2 <= m; ++q2) {
        const auto w = LocalWeights::product_point(p, q1, q2);
        for (int i = 1; i < p; ++i) {
          const Fraction a = bv::age(w, i);
          EXPECT_TRUE(a.is_integer());
          EXPECT_EQ(a + bv::age(w, p - i), Fraction(w.codimension()));
          EXPECT_GE(a, Fraction(1));
          EXPECT_LE(a, Fraction(3));
        }
      }
  }
}

TEST(Ages, P2MatchesPrintedTables) {
  for (int p : {3, 5, 7, 11, 13, 17, 19}) EXPECT_EQ(bv::p2_matrix(p), bv::reference::printed_p2_matrix(p)) << p;
  EXPECT_EQ(bv::p2_matrix(3), (bv::IntMatrix{{2}}));
  EXPECT_EQ(bv::p2_matrix(5), (bv::IntMatrix{{4, 2}, {2, 4}}));
}

TEST(Ages, P2Errors) {
  EXPECT_THROW(bv::p2_matrix(2), std::invalid_argument);
  EXPECT_THROW(bv::p2_matrix(23), std::invalid_argument);
}

TEST(Ages, P2IsSymmetric) {
  for (int p : {3, 5, 7, 11, 13, 17, 19}) {
    const auto& m = bv::p2_matrix(p);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m[i][j], m[j][i]);
  }
}

TEST(Ages, ShiftCounts) {
  const std::vector<std::int64_t> v1{1, 0}, v2{3, 1};
  const auto s = bv::shift_counts(5, v1, v2);
  EXPECT_EQ(s.n2, 4 * 3 + 2 * 1);
  EXPECT_EQ(s.n1, s.n3);
  EXPECT_EQ(s.n1 + s.n2 + s.n3, 4 * 1 * 4);
  EXPECT_THROW(bv::shift_counts(5, v1, std::vector<std::int64_t>{1}), std::invalid_argument);
  EXPECT_EQ(bv::shift_counts(2, {}, {}), bv::ShiftCounts{});
  EXPECT_THROW(bv::shift_counts(2, v1, {}), std::invalid_argument);
}

TEST(Ages, ClosedFormsAgreeWithMatrixProduct) {
  for (int p : {3, 5, 7, 11, 13, 17, 19})
    for (const auto& c1 : bv::all_classes(p))
      for (const auto& c2 : bv::all_classes(p)) {
        const auto f1 = bv::fixed_locus(c1), f2 = bv::fixed_locus(c2);
        EXPECT_EQ(bv::shift_counts(p, f1.point_types, f2.point_types), bv::closed_form_counts(p, f1.alpha, f2.alpha))
            << p << " " << c1.r << "," << c1.a << " " << c2.r << "," << c2.a;
      }
  EXPECT_THROW(bv::closed_form_counts(2, 0, 0), std::invalid_argument);
}
