#include "bvorb/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace bv {

namespace {

constexpr std::array<int, 8> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19};

struct RA {
  int r;
  int a;
  bool starred = false;
};

// (r, a) lists per prime. Starred p = 2 entries have delta = 0.
// (1,1) completes the 64 involution classes; the rest follow the published list.
const std::map<int, std::vector<RA>>& raw_lists() {
  static const std::map<int, std::vector<RA>> lists = {
      {2,
       {{1, 1},       {2, 0, true},  {2, 2, true},  {3, 1},       {3, 3},       {4, 2},        {4, 4},
        {5, 3},       {5, 5},        {6, 2, true},  {6, 4, true}, {6, 6},       {7, 3},        {7, 5},
        {7, 7},       {8, 2},        {8, 4},        {8, 6},       {8, 8},       {9, 1},        {9, 3},
        {9, 5},       {9, 7},        {9, 9},        {10, 0, true}, {10, 2, true}, {10, 4, true}, {10, 6, true},
        {10, 8, true}, {10, 10, true}, {11, 1},     {11, 3},      {11, 5},      {11, 7},       {11, 9},
        {11, 11},     {12, 2},       {12, 4},       {12, 6},      {12, 8},      {12, 10},      {13, 3},
        {13, 5},      {13, 7},       {13, 9},       {14, 2, true}, {14, 4, true}, {14, 6, true}, {14, 8},
        {15, 3},      {15, 5},       {15, 7},       {16, 2},      {16, 4},      {16, 6},       {17, 1},
        {17, 3},      {17, 5},       {18, 0, true}, {18, 2, true}, {18, 4, true}, {19, 1},      {19, 3},
        {20, 2}}},
      {3,
       {{2, 0},  {2, 4},  {4, 1},  {4, 3},  {6, 2},  {6, 4},  {8, 1},  {8, 3},  {8, 5},  {8, 7},  {10, 0}, {10, 2},
        {10, 4}, {10, 6}, {12, 1}, {12, 3}, {12, 5}, {14, 2}, {14, 4}, {16, 1}, {16, 3}, {18, 0}, {18, 2}, {20, 1}}},
      {5, {{2, 1}, {6, 2}, {6, 4}, {10, 1}, {10, 3}, {14, 2}, {18, 1}}},
      {7, {{4, 1}, {4, 3}, {10, 0}, {10, 2}, {16, 1}}},
      {11, {{2, 0}, {2, 2}, {12, 1}}},
      {13, {{10, 1}}},
      {17, {{6, 1}}},
      {19, {{4, 1}}},
  };
  return lists;
}

// alpha = (r + offset) / divisor.
struct AlphaRule {
  int offset;
  int divisor;
};

AlphaRule alpha_rule(int p) {
  switch (p) {
    case 2: return {-10, 1};
    case 3: return {-8, 2};
    case 5: return {-6, 4};
    case 7: return {-4, 6};
    case 11: return {-2, 10};
    case 13: return {2, 12};
    case 17: return {-6, 16};
    case 19: return {-4, 18};
    default: throw std::invalid_argument("unsupported prime " + std::to_string(p));
  }
}

// Point type counts as affine functions slope * alpha + intercept.
const std::vector<std::pair<int, int>>& point_type_rule(int p) {
  static const std::map<int, std::vector<std::pair<int, int>>> rules = {
      {2, {}},
      {3, {{1, 3}}},
      {5, {{2, 3}, {1, 1}}},
      {7, {{2, 2}, {2, 1}, {1, 0}}},
      {11, {{2, 1}, {2, 0}, {2, 0}, {2, 1}, {1, 0}}},
      {13, {{2, 1}, {2, 1}, {2, 0}, {2, -1}, {2, -2}, {1, -1}}},
      {17, {{2, 0}, {2, 0}, {2, 0}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {1, 1}}},
      {19, {{2, 0}, {2, 0}, {2, 0}, {2, 1}, {2, 2}, {2, 1}, {2, 1}, {2, 0}, {1, 0}}},
  };
  return rules.at(p);
}

std::optional<std::int64_t> exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0) return std::nullopt;
  return num / den;
}

// Total isolated points and rational curves.
struct PointsAndCurves {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
};

PointsAndCurves table_counts(int p, int r, int a) {
  switch (p) {
    case 2: return {0, exact_div(r - a, 2)};
    case 3:
    case 5:
    case 7: return {exact_div((p - 2) * r - 2, p - 1), exact_div(2 + r - (p - 1) * a, 2 * (p - 1))};
    case 11: return {exact_div(2 + 9 * r, 10), exact_div(-2 + r - 10 * a, 20)};
    case 13: return {9, 1};
    case 17: return {7, 0};
    case 19: return {5, 0};
    default: return {};
  }
}

std::optional<FixedLocusProfile> derive_profile(const K3Class& c) {
  const int p = c.prime;
  if (!is_supported_prime(p) || c.r < 1 || c.r > 20 || c.a < 0) return std::nullopt;
  const std::int64_t excess = 22 - c.r - static_cast<std::int64_t>(p - 1) * c.a;
  if (excess < 0 || excess % (2 * (p - 1)) != 0) return std::nullopt;

  FixedLocusProfile prof;
  const auto lambda = exact_div(22 - c.r, p - 1);
  const AlphaRule ar = alpha_rule(p);
  const auto alpha = exact_div(c.r + ar.offset, ar.divisor);
  if (!lambda || !alpha) return std::nullopt;
  prof.lambda = *lambda;
  prof.alpha = *alpha;

  if (c.special == SpecialLocus::EmptyFixedLocus) {
    prof.genus = 0;
    prof.rational_curves = -1;
    return prof;
  }

  prof.genus = excess / (2 * (p - 1));
  const auto [n, k] = table_counts(p, c.r, c.a);
  if (!n || !k || *k < -1 || *n < 0) return std::nullopt;
  prof.rational_curves = *k;

  for (const auto& [slope, intercept] : point_type_rule(p)) {
    const std::int64_t v = slope * prof.alpha + intercept;
    if (v < 0) return std::nullopt;
    prof.point_types.push_back(v);
  }
  if (prof.point_count() != *n) return std::nullopt;
  return prof;
}

}  // namespace

std::string_view to_string(SpecialLocus s) {
  switch (s) {
    case SpecialLocus::Generic: return "generic";
    case SpecialLocus::EmptyFixedLocus: return "empty";
    case SpecialLocus::TwoEllipticCurves: return "two-elliptic";
  }
  return "generic";
}

K3Class K3Class::make(int prime, int r, int a, std::optional<int> delta) {
  K3Class c{prime, r, a, delta, SpecialLocus::Generic};
  if (prime == 2 && r == 10 && a == 10) c.special = SpecialLocus::EmptyFixedLocus;
  if (prime == 2 && r == 10 && a == 8) c.special = SpecialLocus::TwoEllipticCurves;
  return c;
}

std::int64_t FixedLocusProfile::point_count() const {
  std::int64_t n = 0;
  for (auto v : point_types) n += v;
  return n;
}

HodgeDiamond FixedLocusProfile::curve_polynomial() const {
  HodgeDiamond h(1);
  h.at(0, 0) = rational_curves + 1;
  h.at(1, 1) = rational_curves + 1;
  h.at(1, 0) = genus;
  h.at(0, 1) = genus;
  return h;
}

std::span<const int> supported_primes() { return kPrimes; }

bool is_supported_prime(int p) { return std::find(kPrimes.begin(), kPrimes.end(), p) != kPrimes.end(); }

const std::vector<K3Class>& all_classes(int p) {
  static const std::map<int, std::vector<K3Class>> catalog = [] {
    std::map<int, std::vector<K3Class>> out;
    for (const auto& [prime, list] : raw_lists()) {
      auto& v = out[prime];
      for (const RA& e : list) {
        std::optional<int> delta;
        if (prime == 2) delta = e.starred ? 0 : 1;
        v.push_back(K3Class::make(prime, e.r, e.a, delta));
      }
      std::sort(v.begin(), v.end());
    }
    return out;
  }();
  auto it = catalog.find(p);
  if (it == catalog.end()) throw std::invalid_argument("unsupported prime " + std::to_string(p));
  return it->second;
}

std::optional<K3Class> find_class(int p, int r, int a) {
  if (!is_supported_prime(p)) return std::nullopt;
  for (const K3Class& c : all_classes(p))
    if (c.r == r && c.a == a) return c;
  return std::nullopt;
}

bool validate(const K3Class& c) noexcept {
  try {
    return derive_profile(c).has_value();
  } catch (...) {
    return false;
  }
}

FixedLocusProfile fixed_locus(const K3Class& c) {
  auto prof = derive_profile(c);
  if (!prof)
    throw std::invalid_argument("inadmissible class (p=" + std::to_string(c.prime) + ", r=" + std::to_string(c.r) +
                                ", a=" + std::to_string(c.a) + ")");
  return *prof;
}

HodgeDiamond fixed_curves_polynomial(const K3Class& c, LocusReading reading) {
  if (reading == LocusReading::Geometric && c.special == SpecialLocus::TwoEllipticCurves) {
    // Two disjoint elliptic curves.
    HodgeDiamond elliptic(1, {{1, 1}, {1, 1}});
    return elliptic + elliptic;
  }
  if (reading == LocusReading::Geometric && c.prime >= 13) {
    // The tabulated k counts every fixed curve here; there is no separate genus-0 curve C.
    const auto k = fixed_locus(c).rational_curves;
    return scale_exact(HodgeDiamond(1, {{1, 0}, {0, 1}}), k);
  }
  return fixed_locus(c).curve_polynomial();
}

}  // namespace bv
