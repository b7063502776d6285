#pragma once

/**
 * @file ages.hpp
 * @brief Ages of group elements at fixed points of a product of K3 surfaces.
 *
 * The quotient group G is the kernel of the product character, generated by
 * (rho_1, rho_2^{-1}). At a product point where the factors have local types
 * (1/p)(q1+1, p-q1) and (1/p)(q2+1, p-q2), the generator therefore acts with
 * exponents (q1+1, p-q1, p-q2-1, q2) mod p. The power gamma^i multiplies
 * every exponent by i.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "bvorb/arith.hpp"

namespace bv {

/// Linearization exponents (mod p) of the generator at a fixed point.
/// The exponents must sum to 0 mod p.
class LocalWeights {
 public:
  LocalWeights(int prime, std::vector<int> exponents);

  /// Weights at the product of two isolated points of types q1 and q2.
  static LocalWeights product_point(int prime, int q1, int q2);

  int prime() const { return prime_; }
  std::span<const int> exponents() const { return exponents_; }
  /// Number of nonzero exponents, i.e. the codimension of the fixed component.
  int codimension() const;

 private:
  int prime_;
  std::vector<int> exponents_;
};

/// Age of gamma^i: sum of fractional parts of i*e/p over the exponents e.
/// Throws std::invalid_argument when i is 0 mod p.
Fraction age(const LocalWeights& w, int i);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Entry (q1-1, q2-1) counts i in 1..p-1 for which gamma^i has age 2 at a
/// point of type q1 x q2. Brute-forced once per prime and memoized.
/// Throws std::invalid_argument for p = 2 or an unsupported prime.
const IntMatrix& p2_matrix(int p);

struct ShiftCounts {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;

  friend bool operator==(const ShiftCounts&, const ShiftCounts&) = default;
};

/// N2 = v1 P2 v2^T, N1 = N3 = ((p-1)|v1||v2| - N2)/2.
ShiftCounts shift_counts(int p, std::span<const std::int64_t> v1, std::span<const std::int64_t> v2);

/// The closed-form polynomials in (alpha1, alpha2) for N2 and 2*N1, per prime.
ShiftCounts closed_form_counts(int p, std::int64_t alpha1, std::int64_t alpha2);

}  // namespace bv
