#pragma once

/**
 * @file hodge.hpp
 * @brief Hodge polynomials of bounded bidegree.
 *
 * A HodgeDiamond of dimension d stores the coefficients of
 *
 *     h(s,t) = sum_{0 <= i,j <= d} h^{i,j} s^i t^j
 *
 * densely in a (d+1) x (d+1) box, with d <= 4. The same type holds final
 * diamonds and intermediate summands (eigenspace pieces, twisted sectors),
 * so entries may be negative or asymmetric until a diamond is assembled.
 * Symmetry checks are explicit and only applied to assembled results.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace bv {

class HodgeDiamond {
 public:
  static constexpr int kMaxDim = 4;

  /// The zero polynomial in dimension `dim`.
  explicit HodgeDiamond(int dim = 0);

  /// Row-major rows; row i holds h^{i,0..d}. Throws on a non-square shape.
  HodgeDiamond(int dim, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  /// The constant polynomial 1.
  static HodgeDiamond one(int dim);
  /// c * s^i t^j.
  static HodgeDiamond monomial(int dim, int i, int j, std::int64_t c = 1);

  int dim() const { return dim_; }
  std::int64_t operator()(int i, int j) const;
  std::int64_t& at(int i, int j);

  /// max(i, j) over nonzero coefficients, or -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  std::int64_t coefficient_sum() const;

  /// The same polynomial viewed in a larger box.
  HodgeDiamond lifted(int new_dim) const;

  HodgeDiamond& operator+=(const HodgeDiamond& o);
  HodgeDiamond& operator-=(const HodgeDiamond& o);

  bool has_hodge_symmetry() const;
  bool has_poincare_duality() const;
  bool is_nonnegative() const;

  std::string to_string() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
  friend auto operator<=>(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  int dim_;
  std::array<std::int64_t, (kMaxDim + 1) * (kMaxDim + 1)> c_{};
};

/// Entrywise sum; throws std::invalid_argument on dimension mismatch.
HodgeDiamond add(const HodgeDiamond& a, const HodgeDiamond& b);
inline HodgeDiamond operator+(HodgeDiamond a, const HodgeDiamond& b) { return a += b; }
inline HodgeDiamond operator-(HodgeDiamond a, const HodgeDiamond& b) { return a -= b; }

/// Polynomial product (Künneth); result dimension is a.dim() + b.dim().
HodgeDiamond mul(const HodgeDiamond& a, const HodgeDiamond& b);
inline HodgeDiamond operator*(const HodgeDiamond& a, const HodgeDiamond& b) { return mul(a, b); }

/// Entrywise a * num / den. Throws std::domain_error if any entry is not
/// divisible exactly.
HodgeDiamond scale_exact(const HodgeDiamond& a, std::int64_t num, std::int64_t den = 1);

/// Multiply by (st)^k within the same box; throws std::out_of_range when a
/// nonzero coefficient would leave it.
HodgeDiamond shift(const HodgeDiamond& a, int k);

/// h(-1,-1) = sum (-1)^{i+j} h^{i,j}.
std::int64_t euler_characteristic(const HodgeDiamond& a);

/// Entry (i,j) moves to (d-i, j).
HodgeDiamond mirror_reflect(const HodgeDiamond& a);

}  // namespace bv
