#include <algorithm>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "bvorb/classifier.hpp"
#include "bvorb/reference.hpp"

TEST(Classifier, InputCounts) {
  EXPECT_EQ(bv::enumerate_specs(2, 4).size(), 64u * 65u / 2u);
  EXPECT_EQ(bv::enumerate_specs(3, 4).size(), 24u * 25u / 2u);
  EXPECT_EQ(bv::enumerate_specs(3, 3).size(), 24u);
  EXPECT_EQ(bv::enumerate_specs(19, 4).size(), 1u);
  EXPECT_THROW(bv::enumerate_specs(5, 3), std::invalid_argument);
  EXPECT_THROW(bv::enumerate(3, 2), std::invalid_argument);
  EXPECT_THROW(bv::enumerate(23, 4), std::invalid_argument);
}

TEST(Classifier, CanonicalOrder) {
  for (const auto& s : bv::enumerate_specs(5, 4)) EXPECT_LE(s.first, s.second_k3());
}

TEST(Classifier, FamilyCountsForOddPrimes) {
  const std::vector<std::pair<int, std::int64_t>> expected{{3, 299}, {5, 28}, {7, 15}, {11, 6}, {13, 1}, {17, 1}, {19, 1}};
  for (auto [p, n] : expected) {
    const auto t = bv::enumerate(p, 4);
    EXPECT_EQ(t.distinct_count, n) << p;
    EXPECT_EQ(static_cast<std::int64_t>(t.entries.size()), n);
    std::int64_t total = 0;
    for (const auto& e : t.entries) total += e.multiplicity;
    EXPECT_EQ(total, t.input_count);
  }
}

TEST(Classifier, ChiRangesForOddPrimes) {
  for (int p : {3, 5, 7, 11}) {
    const auto t = bv::enumerate(p, 4);
    const auto pub = *bv::reference::published_enumeration(p);
    EXPECT_EQ(t.chi_min, pub.chi_min) << p;
    EXPECT_EQ(t.chi_max, pub.chi_max) << p;
  }
}

TEST(Classifier, InvolutionRange) {
  const auto t = bv::enumerate(2, 4);
  EXPECT_EQ(t.input_count, 2080);
  EXPECT_EQ(t.chi_max, 888);
  EXPECT_EQ(t.chi_min, -252);
  for (auto chi : t.euler_values()) EXPECT_EQ(chi % 6, 0);
}

TEST(Classifier, ValuesNearestZero) {
  auto nearest = [](const bv::FamilyTable& t, std::size_t k) {
    auto v = t.euler_values();
    std::stable_sort(v.begin(), v.end(), [](auto a, auto b) { return std::llabs(a) < std::llabs(b); });
    std::set<std::int64_t> out;
    for (auto x : v) {
      if (out.size() == k && !out.empty() && std::llabs(x) > std::llabs(*out.rbegin()) &&
          std::llabs(x) > std::llabs(*out.begin()))
        break;
      out.insert(x);
    }
    return out;
  };
  EXPECT_EQ(nearest(bv::enumerate(2, 4), 3), (std::set<std::int64_t>{-12, -6, 0}));
  const auto p3 = bv::enumerate(3, 4).euler_values();
  EXPECT_TRUE(std::binary_search(p3.begin(), p3.end(), 0));
  EXPECT_TRUE(std::binary_search(p3.begin(), p3.end(), 24));
  EXPECT_TRUE(std::binary_search(p3.begin(), p3.end(), 48));
  EXPECT_TRUE(std::binary_search(p3.begin(), p3.end(), -48));
  for (auto x : p3) EXPECT_TRUE(x == 0 || std::llabs(x) >= 24) << x;
}

TEST(Classifier, Threefolds) {
  const auto t = bv::enumerate(3, 3);
  EXPECT_EQ(t.input_count, 24);
  for (const auto& e : t.entries) EXPECT_EQ(e.representative.spec.dimension, 3);
}

TEST(Classifier, Deterministic) {
  const auto a = bv::enumerate(5, 4), b = bv::enumerate(5, 4);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].representative.diamond, b.entries[i].representative.diamond);
    EXPECT_EQ(a.entries[i].multiplicity, b.entries[i].multiplicity);
  }
}

TEST(Classifier, InvolutionMirrorClosure) {
  const auto rep = bv::mirror_check_p2();
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.pairs_checked, 2080);
  EXPECT_EQ(static_cast<std::int64_t>(rep.verified.size() + rep.absent.size()), rep.pairs_checked);
  for (const auto& mp : rep.verified) {
    EXPECT_EQ(mp.partner.first.r + mp.x.first.r + mp.partner.second_k3().r + mp.x.second_k3().r, 40);
  }
}

TEST(Classifier, MirrorSearch) {
  const auto p2 = bv::mirror_search(2, 4);
  EXPECT_EQ(p2.involution, 20);
  for (int p : {5, 7, 11}) {
    const auto r = bv::mirror_search(p, 4);
    EXPECT_FALSE(r.involution.has_value()) << p;
    EXPECT_TRUE(r.chi_compatible.empty()) << p;
  }
  for (int dim : {3, 4}) {
    const auto r = bv::mirror_search(3, dim);
    EXPECT_FALSE(r.involution.has_value());
    EXPECT_EQ(r.chi_compatible, std::vector<int>{12});
  }
}

TEST(Classifier, CrepantSurvey) {
  const auto s2 = bv::crepant_survey(2);
  EXPECT_TRUE(std::all_of(s2.begin(), s2.end(), [](const auto& x) { return x.second; }));
  const auto s3 = bv::crepant_survey(3);
  for (const auto& [spec, ok] : s3) EXPECT_EQ(ok, spec.first.r == 2 && spec.second_k3().r == 2);
  const auto s7 = bv::crepant_survey(7);
  EXPECT_TRUE(std::none_of(s7.begin(), s7.end(), [](const auto& x) { return x.second; }));
}
