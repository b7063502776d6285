#include "bvorb/ages.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "bvorb/catalog.hpp"

namespace bv {

namespace {

int mod(std::int64_t x, int p) {
  const auto m = static_cast<int>(x % p);
  return m < 0 ? m + p : m;
}

IntMatrix brute_force_p2(int p) {
  const int m = (p - 1) / 2;
  IntMatrix out(m, std::vector<std::int64_t>(m, 0));
  for (int q1 = 1; q1 <= m; ++q1)
    for (int q2 = 1; q2 <= m; ++q2) {
      const LocalWeights w = LocalWeights::product_point(p, q1, q2);
      for (int i = 1; i < p; ++i)
        if (age(w, i) == Fraction(2)) ++out[q1 - 1][q2 - 1];
    }
  return out;
}

}  // namespace

LocalWeights::LocalWeights(int prime, std::vector<int> exponents) : prime_(prime), exponents_(std::move(exponents)) {
  if (prime < 2) throw std::invalid_argument("LocalWeights needs a prime >= 2");
  std::int64_t sum = 0;
  for (int& e : exponents_) {
    e = mod(e, prime_);
    sum += e;
  }
  if (sum % prime_ != 0)
    throw std::invalid_argument("local weights must sum to 0 mod p (special-linear action)");
}

LocalWeights LocalWeights::product_point(int prime, int q1, int q2) {
  return LocalWeights(prime, {q1 + 1, prime - q1, prime - q2 - 1, q2});
}

int LocalWeights::codimension() const {
  return static_cast<int>(std::count_if(exponents_.begin(), exponents_.end(), [](int e) { return e != 0; }));
}

Fraction age(const LocalWeights& w, int i) {
  const int p = w.prime();
  if (mod(i, p) == 0) throw std::invalid_argument("age is undefined for the identity element");
  std::int64_t total = 0;
  for (int e : w.exponents()) total += mod(static_cast<std::int64_t>(i) * e, p);
  return {total, p};
}

const IntMatrix& p2_matrix(int p) {
  if (p == 2) throw std::invalid_argument("P2 is undefined for p = 2: involutions have no isolated fixed points");
  if (!is_supported_prime(p)) throw std::invalid_argument("unsupported prime " + std::to_string(p));
  static const std::map<int, IntMatrix> table = [] {
    std::map<int, IntMatrix> t;
    for (int q : supported_primes())
      if (q > 2) t.emplace(q, brute_force_p2(q));
    return t;
  }();
  return table.at(p);
}

ShiftCounts shift_counts(int p, std::span<const std::int64_t> v1, std::span<const std::int64_t> v2) {
  if (p == 2) {
    if (!v1.empty() || !v2.empty()) throw std::invalid_argument("point vectors must be empty for p = 2");
    return {};
  }
  const IntMatrix& m = p2_matrix(p);
  const auto len = static_cast<std::size_t>((p - 1) / 2);
  if (v1.size() != len || v2.size() != len)
    throw std::invalid_argument("point vectors must have length (p-1)/2 = " + std::to_string(len));

  std::int64_t n2 = 0;
  std::int64_t pts1 = 0;
  std::int64_t pts2 = 0;
  for (std::size_t i = 0; i < len; ++i) {
    pts1 = checked_add(pts1, v1[i]);
    pts2 = checked_add(pts2, v2[i]);
    for (std::size_t j = 0; j < len; ++j) n2 = checked_add(n2, checked_mul(checked_mul(v1[i], m[i][j]), v2[j]));
  }
  const std::int64_t total = checked_mul(p - 1, checked_mul(pts1, pts2));
  const std::int64_t rest = checked_sub(total, n2);
  if (rest % 2 != 0 || rest < 0) throw std::logic_error("age-1 and age-3 shifts do not pair up");
  return {rest / 2, n2, rest / 2};
}

ShiftCounts closed_form_counts(int p, std::int64_t alpha1, std::int64_t alpha2) {
  // {const, alpha1 + alpha2, alpha1 * alpha2} coefficients for N2 and 2*N1.
  struct Row {
    std::array<std::int64_t, 3> n2;
    std::array<std::int64_t, 3> twice_n1;
  };
  static const std::map<int, Row> rows = {
      {5, {{52, 38, 28}, {12, 10, 8}}},
      {7, {{46, 70, 110}, {8, 20, 40}}},
      {11, {{36, 138, 570}, {4, 42, 240}}},
      {13, {{28, -154, 1012}, {20, -110, 440}}},
      {17, {{536, 1150, 2480}, {248, 530, 1120}}},
      {19, {{314, 1054, 3570}, {136, 476, 1632}}},
  };
  if (p == 3) {
    const std::int64_t n2 = checked_mul(2, checked_mul(alpha1 + 3, alpha2 + 3));
    return {0, n2, 0};
  }
  auto it = rows.find(p);
  if (it == rows.end()) throw std::invalid_argument("no closed form for p = " + std::to_string(p));
  auto eval = [&](const std::array<std::int64_t, 3>& c) {
    return checked_add(checked_add(c[0], checked_mul(c[1], alpha1 + alpha2)), checked_mul(c[2], checked_mul(alpha1, alpha2)));
  };
  const std::int64_t twice_n1 = eval(it->second.twice_n1);
  if (twice_n1 % 2 != 0) throw std::logic_error("odd closed-form 2*N1");
  return {twice_n1 / 2, eval(it->second.n2), twice_n1 / 2};
}

}  // namespace bv
