#pragma once

// Checked 64-bit integer arithmetic and a minimal exact fraction type.
// Every Hodge number in this library is an exact integer; overflow traps
// with std::overflow_error instead of wrapping.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bv {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

/// Reduced fraction with positive denominator.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("fraction with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// The integer value; throws std::domain_error when not integral.
  std::int64_t to_integer() const {
    if (den_ != 1) throw std::domain_error("fraction is not an integer");
    return num_;
  }

  friend Fraction operator+(Fraction a, Fraction b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return {checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l};
  }
  friend Fraction operator-(Fraction a) { return {checked_sub(0, a.num_), a.den_}; }
  friend Fraction operator-(Fraction a, Fraction b) { return a + (-b); }
  friend Fraction operator*(Fraction a, Fraction b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
    const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
    const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
    const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
    return {checked_mul(n1, n2), checked_mul(d1, d2)};
  }
  Fraction& operator+=(Fraction o) { return *this = *this + o; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction& a, const Fraction& b) {
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    os << f.num_;
    if (f.den_ != 1) os << '/' << f.den_;
    return os;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked_sub(0, num_);
      den_ = checked_sub(0, den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace bv
