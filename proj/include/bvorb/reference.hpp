#pragma once

// Published closed forms and tabulated values, kept apart from the builder so
// they can serve as independent oracles for the assembled diamonds.

#include <cstdint>
#include <optional>
#include <vector>

#include "bvorb/ages.hpp"
#include "bvorb/arith.hpp"
#include "bvorb/hodge.hpp"

namespace bv::reference {

/// The printed P2 matrices for p in {3, 5, 7, 11, 13, 17, 19}.
const IntMatrix& printed_p2_matrix(int p);

/// Threefold diamond with h11 = 7 + 4r - 3a and h21 = 43 - 2r - 3a.
HodgeDiamond threefold_diamond(int r, int a);
std::int64_t threefold_chi(int r);

/// Entries a = h11, b = h22, d = h21, e = h31 of the generic fourfold diamond.
struct FourfoldEntries {
  Fraction a, b, d, e;
};
/// Defined for p in {2, 3, 5, 7, 11}.
FourfoldEntries fourfold_entries(int p, int r1, int a1, int r2, int a2);
HodgeDiamond fourfold_diamond(const FourfoldEntries& x);

/// Euler characteristic as a polynomial in (r1, r2), p in {2, 3, 5, 7, 11}.
Fraction fourfold_chi(int p, int r1, int r2);

/// p = 2 with one factor (10, 10) and the other of rank r2.
HodgeDiamond p2_free_action_diamond(int r2);

/// The single diamond for p in {13, 17, 19}.
HodgeDiamond single_family_diamond(int p);

struct PublishedEnumeration {
  int prime;
  std::int64_t families;  // -1 when not stated
  std::int64_t chi_min;
  std::int64_t chi_max;
};
std::optional<PublishedEnumeration> published_enumeration(int p);

/// The cardinalities of the (r, a) lists per prime.
std::int64_t published_catalog_size(int p);

}  // namespace bv::reference
