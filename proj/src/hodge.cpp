#include "bvorb/hodge.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bvorb/arith.hpp"

namespace bv {

namespace {

constexpr int kStride = HodgeDiamond::kMaxDim + 1;

void check_dim(int dim) {
  if (dim < 0 || dim > HodgeDiamond::kMaxDim)
    throw std::invalid_argument("Hodge diamond dimension must be in 0..4, got " + std::to_string(dim));
}

}  // namespace

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) { check_dim(dim); }

HodgeDiamond::HodgeDiamond(int dim, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : HodgeDiamond(dim) {
  if (static_cast<int>(rows.size()) != dim + 1) throw std::invalid_argument("expected dim+1 rows");
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim + 1) throw std::invalid_argument("expected dim+1 columns");
    int j = 0;
    for (std::int64_t v : row) c_[i * kStride + j++] = v;
    ++i;
  }
}

HodgeDiamond HodgeDiamond::one(int dim) { return monomial(dim, 0, 0, 1); }

HodgeDiamond HodgeDiamond::monomial(int dim, int i, int j, std::int64_t c) {
  HodgeDiamond h(dim);
  h.at(i, j) = c;
  return h;
}

std::int64_t HodgeDiamond::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i > dim_ || j > dim_) return 0;
  return c_[i * kStride + j];
}

std::int64_t& HodgeDiamond::at(int i, int j) {
  if (i < 0 || j < 0 || i > dim_ || j > dim_)
    throw std::out_of_range("bidegree (" + std::to_string(i) + "," + std::to_string(j) + ") outside dimension " +
                            std::to_string(dim_));
  return c_[i * kStride + j];
}

int HodgeDiamond::degree() const {
  int deg = -1;
  for (int i = 0; i <= dim_; ++i)
    for (int j = 0; j <= dim_; ++j)
      if ((*this)(i, j) != 0) deg = std::max({deg, i, j});
  return deg;
}

std::int64_t HodgeDiamond::coefficient_sum() const {
  std::int64_t s = 0;
  for (int i = 0; i <= dim_; ++i)
    for (int j = 0; j <= dim_; ++j) s = checked_add(s, (*this)(i, j));
  return s;
}

HodgeDiamond HodgeDiamond::lifted(int new_dim) const {
  HodgeDiamond out(new_dim);
  for (int i = 0; i <= dim_; ++i)
    for (int j = 0; j <= dim_; ++j) {
      const std::int64_t v = (*this)(i, j);
      if (v == 0) continue;
      if (i > new_dim || j > new_dim) throw std::out_of_range("lifting would drop a nonzero coefficient");
      out.at(i, j) = v;
    }
  return out;
}

HodgeDiamond& HodgeDiamond::operator+=(const HodgeDiamond& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in Hodge diamond addition");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
  return *this;
}

HodgeDiamond& HodgeDiamond::operator-=(const HodgeDiamond& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch in Hodge diamond subtraction");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = checked_sub(c_[k], o.c_[k]);
  return *this;
}

bool HodgeDiamond::has_hodge_symmetry() const {
  for (int i = 0; i <= dim_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool HodgeDiamond::has_poincare_duality() const {
  for (int i = 0; i <= dim_; ++i)
    for (int j = 0; j <= dim_; ++j)
      if ((*this)(i, j) != (*this)(dim_ - i, dim_ - j)) return false;
  return true;
}

bool HodgeDiamond::is_nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v >= 0; });
}

std::string HodgeDiamond::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= dim_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j <= dim_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

HodgeDiamond add(const HodgeDiamond& a, const HodgeDiamond& b) { return a + b; }

HodgeDiamond mul(const HodgeDiamond& a, const HodgeDiamond& b) {
  const int d = a.dim() + b.dim();
  if (d > HodgeDiamond::kMaxDim)
    throw std::invalid_argument("product dimension " + std::to_string(d) + " exceeds 4");
  HodgeDiamond out(d);
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j) {
      const std::int64_t x = a(i, j);
      if (x == 0) continue;
      for (int k = 0; k <= b.dim(); ++k)
        for (int l = 0; l <= b.dim(); ++l) {
          const std::int64_t y = b(k, l);
          if (y != 0) out.at(i + k, j + l) = checked_add(out(i + k, j + l), checked_mul(x, y));
        }
    }
  return out;
}

HodgeDiamond scale_exact(const HodgeDiamond& a, std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("scale_exact needs a positive denominator");
  HodgeDiamond out(a.dim());
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j) {
      const std::int64_t v = checked_mul(a(i, j), num);
      if (v % den != 0)
        throw std::domain_error("scale_exact: coefficient " + std::to_string(a(i, j)) + " * " + std::to_string(num) +
                                " is not divisible by " + std::to_string(den));
      out.at(i, j) = v / den;
    }
  return out;
}

HodgeDiamond shift(const HodgeDiamond& a, int k) {
  if (k < 0) throw std::invalid_argument("shift needs k >= 0");
  HodgeDiamond out(a.dim());
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j) {
      const std::int64_t v = a(i, j);
      if (v == 0) continue;
      if (i + k > a.dim() || j + k > a.dim())
        throw std::out_of_range("shift by (st)^" + std::to_string(k) + " overflows bidegree (" +
                                std::to_string(a.dim()) + "," + std::to_string(a.dim()) + ")");
      out.at(i + k, j + k) = v;
    }
  return out;
}

std::int64_t euler_characteristic(const HodgeDiamond& a) {
  std::int64_t chi = 0;
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j)
      chi = ((i + j) % 2 == 0) ? checked_add(chi, a(i, j)) : checked_sub(chi, a(i, j));
  return chi;
}

HodgeDiamond mirror_reflect(const HodgeDiamond& a) {
  HodgeDiamond out(a.dim());
  for (int i = 0; i <= a.dim(); ++i)
    for (int j = 0; j <= a.dim(); ++j) out.at(a.dim() - i, j) = a(i, j);
  return out;
}

}  // namespace bv
