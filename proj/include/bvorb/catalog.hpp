#pragma once

/**
 * @file catalog.hpp
 * @brief Admissible non-symplectic automorphisms of prime order on K3 surfaces.
 *
 * Each admissible class is labelled by (p, r, a): the order p, the rank r of
 * the invariant lattice S, and det(S) = p^a. For p = 2 the extra invariant
 * delta is carried as data only. The fixed locus of the automorphism is a
 * genus-g curve, k rational curves and n isolated points, split by local type
 * (1/p)(i+1, p-i) for i = 1..(p-1)/2.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bvorb/hodge.hpp"

namespace bv {

enum class SpecialLocus {
  Generic,
  EmptyFixedLocus,     // p = 2, (r, a) = (10, 10)
  TwoEllipticCurves,   // p = 2, (r, a) = (10, 8)
};

std::string_view to_string(SpecialLocus s);

struct K3Class {
  int prime = 0;
  int r = 0;
  int a = 0;
  std::optional<int> delta;  // p = 2 only; 0 for the starred entries
  SpecialLocus special = SpecialLocus::Generic;

  /// Builds a class and fills in `special` from (p, r, a).
  static K3Class make(int prime, int r, int a, std::optional<int> delta = std::nullopt);

  friend bool operator==(const K3Class& x, const K3Class& y) {
    return x.prime == y.prime && x.r == y.r && x.a == y.a;
  }
  friend auto operator<=>(const K3Class& x, const K3Class& y) {
    if (auto c = x.prime <=> y.prime; c != 0) return c;
    if (auto c = x.r <=> y.r; c != 0) return c;
    return x.a <=> y.a;
  }
};

struct FixedLocusProfile {
  std::int64_t genus = 0;
  std::int64_t rational_curves = -1;        // k; -1 means no fixed curve at all
  std::vector<std::int64_t> point_types;    // entry i-1 counts type (1/p)(i+1, p-i)
  std::int64_t alpha = 0;
  std::int64_t lambda = 0;                  // (22 - r) / (p - 1)

  std::int64_t point_count() const;
  /// Hodge polynomial of all fixed curves: (k+1)(1 + st) + g(s + t).
  HodgeDiamond curve_polynomial() const;
};

/// The order-3 elliptic curve with complex multiplication; it has 3 fixed points.
struct EllipticFactor {
  int prime = 3;
  int fixed_points = 3;
};

std::span<const int> supported_primes();
bool is_supported_prime(int p);

/// The admissible classes for p in (r, a) order. Throws std::invalid_argument
/// for an unsupported prime.
const std::vector<K3Class>& all_classes(int p);

std::optional<K3Class> find_class(int p, int r, int a);

/// True iff 22 - r - (p-1)a lies in 2(p-1)Z>=0 and the derived genus, curve
/// count and point types are integers with g >= 0, k >= -1, points >= 0.
bool validate(const K3Class& c) noexcept;

/// Closed-form fixed-locus profile. (10,10) at p = 2 is empty; (10,8) uses the
/// genus formula (a genus-2 curve plus one rational curve).
FixedLocusProfile fixed_locus(const K3Class& c);

/// How to read the fixed locus when building curve polynomials.
///
/// GenusFormula: a genus-g curve C plus k rational curves, with g and k taken
/// from the closed forms for every prime.
/// Geometric: (10,8) at p = 2 fixes two elliptic curves (same polynomial as the
/// genus formula). For p >= 13 the tabulated k is the total number of fixed
/// curves, so there is one rational curve for p = 13 and none for p = 17, 19.
/// Only the Geometric reading satisfies the Lefschetz fixed-point formula for
/// p >= 13.
enum class LocusReading { GenusFormula, Geometric };

/// Curve polynomial of the class under the given reading.
HodgeDiamond fixed_curves_polynomial(const K3Class& c, LocusReading reading = LocusReading::GenusFormula);

}  // namespace bv
