#include "bvorb/reference.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace bv::reference {

namespace {

using F = Fraction;

F frac(std::int64_t n, std::int64_t d) { return F(n, d); }

}  // namespace

const IntMatrix& printed_p2_matrix(int p) {
  static const std::map<int, IntMatrix> printed = {
      {3, {{2}}},
      {5, {{4, 2}, {2, 4}}},
      {7, {{6, 4, 4}, {4, 6, 2}, {4, 2, 6}}},
      {11,
       {{10, 6, 8, 8, 6}, {6, 10, 4, 8, 6}, {8, 4, 10, 6, 4}, {8, 8, 6, 10, 4}, {6, 6, 4, 4, 10}}},
      {13,
       {{12, 8, 10, 8, 10, 6},
        {8, 12, 6, 8, 10, 6},
        {10, 6, 12, 6, 8, 8},
        {8, 8, 6, 12, 6, 6},
        {10, 10, 8, 6, 12, 4},
        {6, 6, 8, 6, 4, 12}}},
      {17,
       {{16, 10, 14, 10, 12, 12, 14, 8},
        {10, 16, 8, 12, 10, 10, 12, 10},
        {14, 8, 16, 8, 10, 14, 12, 6},
        {10, 12, 8, 16, 6, 10, 12, 10},
        {12, 10, 10, 6, 16, 8, 10, 8},
        {12, 10, 14, 10, 8, 16, 10, 8},
        {14, 12, 12, 12, 10, 10, 16, 6},
        {8, 10, 6, 10, 8, 8, 6, 16}}},
      {19,
       {{18, 12, 14, 12, 16, 12, 14, 14, 10},
        {12, 18, 8, 14, 14, 10, 12, 16, 8},
        {14, 8, 18, 8, 12, 12, 14, 10, 10},
        {12, 14, 8, 18, 10, 10, 12, 12, 12},
        {16, 14, 12, 10, 18, 10, 12, 16, 8},
        {12, 10, 12, 10, 10, 18, 8, 12, 8},
        {14, 12, 14, 12, 12, 8, 18, 10, 10},
        {14, 16, 10, 12, 16, 12, 10, 18, 6},
        {10, 8, 10, 12, 8, 8, 10, 6, 18}}},
  };
  auto it = printed.find(p);
  if (it == printed.end()) throw std::invalid_argument("no printed P2 matrix for p = " + std::to_string(p));
  return it->second;
}

HodgeDiamond threefold_diamond(int r, int a) {
  const std::int64_t h11 = 7 + 4 * r - 3 * a;
  const std::int64_t h21 = 43 - 2 * r - 3 * a;
  return HodgeDiamond(3, {{1, 0, 0, 1}, {0, h11, h21, 0}, {0, h21, h11, 0}, {1, 0, 0, 1}});
}

std::int64_t threefold_chi(int r) { return -72 + 12 * r; }

FourfoldEntries fourfold_entries(int p, int r1, int a1, int r2, int a2) {
  const F R1 = r1, A1 = a1, R2 = r2, A2 = a2;
  const F r1r2 = R1 * R2, r1a2 = R1 * A2, a1r2 = A1 * R2, a1a2 = A1 * A2;
  FourfoldEntries x;
  switch (p) {
    case 2:
      x.a = F(1) + frac(1, 4) * r1r2 - frac(1, 4) * r1a2 - frac(1, 4) * a1r2 + frac(1, 4) * a1a2 + frac(3, 2) * R1 -
            frac(1, 2) * A1 + frac(3, 2) * R2 - frac(1, 2) * A2;
      x.b = F(648) + a1a2 - F(30) * R2 - F(30) * R1 - F(12) * A2 - F(12) * A1 + F(3) * r1r2;
      x.d = F(22) - frac(1, 2) * r1r2 + frac(1, 2) * a1a2 + F(5) * R2 - F(6) * A2 + F(5) * R1 - F(6) * A1;
      x.e = F(161) + frac(1, 4) * r1a2 + frac(1, 4) * a1a2 + frac(1, 4) * r1r2 + frac(1, 4) * a1r2 -
            frac(13, 2) * R2 - frac(13, 2) * R1 - frac(11, 2) * A1 - frac(11, 2) * A2;
      break;
    case 3:
      x.a = frac(3, 2) + frac(9, 4) * R1 - A1 + frac(9, 4) * R2 - A2 + frac(3, 8) * r1r2 - frac(1, 2) * r1a2 -
            frac(1, 2) * a1r2 + frac(1, 2) * a1a2;
      x.b = F(328) - F(14) * R2 - F(13) * A2 - F(14) * R1 - F(13) * A1 + F(3) * r1r2 - frac(1, 2) * r1a2 -
            frac(1, 2) * a1r2 + F(2) * a1a2;
      x.d = F(22) + F(5) * R2 - frac(13, 2) * A2 + F(5) * R1 - frac(13, 2) * A1 - frac(1, 2) * r1r2 -
            frac(1, 4) * r1a2 - frac(1, 4) * a1r2 + a1a2;
      x.e = frac(1, 4) * a1r2 + frac(1, 2) * a1a2 - frac(13, 4) * R1 - frac(11, 2) * A1 - frac(13, 4) * R2 -
            frac(11, 2) * A2 + frac(1, 4) * r1a2 + frac(1, 8) * r1r2 + frac(161, 2);
      break;
    case 5:
      x.a = frac(15, 4) + frac(25, 8) * R1 - F(2) * A1 + frac(25, 8) * R2 - F(2) * A2 + frac(11, 16) * r1r2 - r1a2 -
            a1r2 + a1a2;
      x.b = F(172) - F(4) * R2 - F(15) * A2 - F(4) * R1 - F(15) * A1 + F(4) * r1r2 - frac(3, 2) * r1a2 -
            frac(3, 2) * a1r2 + F(4) * a1a2;
      x.d = F(22) + F(5) * R2 - frac(15, 2) * A2 + F(5) * R1 - frac(15, 2) * A1 - frac(1, 2) * r1r2 -
            frac(3, 4) * r1a2 - frac(3, 4) * a1r2 + F(2) * a1a2;
      x.e = frac(1, 4) * a1r2 + a1a2 - frac(13, 8) * R1 - frac(11, 2) * A1 - frac(13, 8) * R2 - frac(11, 2) * A2 +
            frac(1, 4) * r1a2 + frac(1, 16) * r1r2 + frac(157, 4);
      break;
    case 7:
      x.a = frac(97, 18) + frac(139, 36) * R1 - F(3) * A1 + frac(139, 36) * R2 - F(3) * A2 + frac(73, 72) * r1r2 -
            frac(3, 2) * r1a2 - frac(3, 2) * a1r2 + frac(3, 2) * a1a2;
      x.b = frac(1112, 9) + frac(10, 9) * R2 - F(17) * A2 + frac(10, 9) * R1 - F(17) * A1 + frac(47, 9) * r1r2 -
            frac(5, 2) * r1a2 - frac(5, 2) * a1r2 + F(6) * a1a2;
      x.d = F(22) + F(5) * R2 - frac(17, 2) * A2 + F(5) * R1 - frac(17, 2) * A1 - frac(1, 2) * r1r2 -
            frac(5, 4) * r1a2 - frac(5, 4) * a1r2 + F(3) * a1a2;
      x.e = frac(1, 4) * a1r2 + frac(3, 2) * a1a2 - frac(13, 12) * R1 - frac(11, 2) * A1 - frac(13, 12) * R2 -
            frac(11, 2) * A2 + frac(1, 4) * r1a2 + frac(1, 24) * r1r2 + frac(51, 2);
      break;
    case 11:
      x.a = frac(83, 10) + frac(21, 4) * R1 - F(5) * A1 + frac(21, 4) * R2 - F(5) * A2 + frac(67, 40) * r1r2 -
            frac(5, 2) * r1a2 - frac(5, 2) * a1r2 + frac(5, 2) * a1a2;
      x.b = frac(456, 5) + frac(42, 5) * R2 - F(21) * A2 + frac(42, 5) * R1 - F(21) * A1 + frac(39, 5) * r1r2 -
            frac(9, 2) * r1a2 - frac(9, 2) * a1r2 + F(10) * a1a2;
      x.d = F(22) + F(5) * R2 - frac(21, 2) * A2 + F(5) * R1 - frac(21, 2) * A1 - frac(1, 2) * r1r2 -
            frac(9, 4) * r1a2 - frac(9, 4) * a1r2 + F(5) * a1a2;
      x.e = frac(1, 4) * a1r2 + frac(5, 2) * a1a2 - frac(13, 20) * R1 - frac(11, 2) * A1 - frac(13, 20) * R2 -
            frac(11, 2) * A2 + frac(1, 4) * r1a2 + frac(1, 40) * r1r2 + frac(29, 2);
      break;
    default: throw std::invalid_argument("no fourfold closed form for p = " + std::to_string(p));
  }
  return x;
}

HodgeDiamond fourfold_diamond(const FourfoldEntries& x) {
  const std::int64_t a = x.a.to_integer(), b = x.b.to_integer(), d = x.d.to_integer(), e = x.e.to_integer();
  return HodgeDiamond(4, {{1, 0, 0, 0, 1}, {0, a, d, e, 0}, {0, d, b, d, 0}, {0, e, d, a, 0}, {1, 0, 0, 0, 1}});
}

Fraction fourfold_chi(int p, int r1, int r2) {
  const F R1 = r1, R2 = r2, r1r2 = R1 * R2;
  switch (p) {
    case 2: return F(888) - F(60) * R2 - F(60) * R1 + F(6) * r1r2;
    case 3: return F(408) - F(36) * R2 - F(36) * R1 + F(6) * r1r2;
    case 5: return F(174) - F(21) * R2 - F(21) * R1 + frac(15, 2) * r1r2;
    case 7: return frac(304, 3) - frac(40, 3) * R2 - frac(40, 3) * R1 + frac(28, 3) * r1r2;
    case 11: return frac(264, 5) - frac(12, 5) * R2 - frac(12, 5) * R1 + frac(66, 5) * r1r2;
    default: throw std::invalid_argument("no Euler characteristic closed form for p = " + std::to_string(p));
  }
}

HodgeDiamond p2_free_action_diamond(int r2) {
  const std::int64_t a = 10 + r2, e = 30 - r2;
  return HodgeDiamond(4, {{1, 0, 0, 0, 1}, {0, a, 0, e, 0}, {0, 0, 204, 0, 0}, {0, e, 0, a, 0}, {1, 0, 0, 0, 1}});
}

HodgeDiamond single_family_diamond(int p) {
  std::int64_t a = 0, b = 0;
  switch (p) {
    case 13: a = 404, b = 1372; break;
    case 17: a = 264, b = 844; break;
    case 19: a = 184, b = 564; break;
    default: throw std::invalid_argument("no single-family diamond for p = " + std::to_string(p));
  }
  return HodgeDiamond(4, {{1, 0, 0, 0, 1}, {0, a, 0, 0, 0}, {0, 0, b, 0, 0}, {0, 0, 0, a, 0}, {1, 0, 0, 0, 1}});
}

std::optional<PublishedEnumeration> published_enumeration(int p) {
  switch (p) {
    case 2: return PublishedEnumeration{2, -1, -92, 888};
    case 3: return PublishedEnumeration{3, 299, -144, 1368};
    case 5: return PublishedEnumeration{5, 28, 24, 1848};
    case 7: return PublishedEnumeration{7, 15, 144, 2064};
    case 11: return PublishedEnumeration{11, 6, 96, 1896};
    case 13: return PublishedEnumeration{13, 1, 2184, 2184};
    case 17: return PublishedEnumeration{17, 1, 1376, 1376};
    case 19: return PublishedEnumeration{19, 1, 936, 936};
    default: return std::nullopt;
  }
}

std::int64_t published_catalog_size(int p) {
  switch (p) {
    case 2: return 64;
    case 3: return 24;
    case 5: return 7;
    case 7: return 5;
    case 11: return 3;
    case 13:
    case 17:
    case 19: return 1;
    default: throw std::invalid_argument("unsupported prime " + std::to_string(p));
  }
}

}  // namespace bv::reference
