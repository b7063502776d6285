#include "bvorb/orbifold.hpp"

#include <stdexcept>

#include "bvorb/ages.hpp"

namespace bv {

namespace {

// Weight of a codimension-3 component: each pair (i, p-i) contributes one
// element of age 1 and one of age 2, so (p-1)(st + (st)^2)/2 overall.
HodgeDiamond codim3_weighted(const HodgeDiamond& part, int dim, int p) {
  const HodgeDiamond lifted = part.lifted(dim);
  return scale_exact(shift(lifted, 1) + shift(lifted, 2), p - 1, 2);
}

// Fixed curves and surfaces have age 1 for every nontrivial element.
HodgeDiamond codim2_weighted(const HodgeDiamond& part, int dim, int p) {
  return scale_exact(shift(part.lifted(dim), 1), p - 1);
}

}  // namespace

OrbifoldSpec OrbifoldSpec::threefold(const K3Class& c) {
  OrbifoldSpec s{3, c.prime, c, EllipticFactor{}};
  s.check();
  return s;
}

OrbifoldSpec OrbifoldSpec::fourfold(const K3Class& c1, const K3Class& c2) {
  OrbifoldSpec s{4, c1.prime, c1, c2};
  s.check();
  return s;
}

void OrbifoldSpec::check() const {
  if (first.prime != prime) throw std::invalid_argument("first factor has a different prime");
  if (!validate(first)) throw std::invalid_argument("first factor is not an admissible class");
  if (dimension == 3) {
    if (prime != 3) throw std::invalid_argument("threefolds are only built for p = 3");
    if (!std::holds_alternative<EllipticFactor>(second))
      throw std::invalid_argument("a threefold needs the elliptic factor");
  } else if (dimension == 4) {
    if (!std::holds_alternative<K3Class>(second)) throw std::invalid_argument("a fourfold needs two K3 factors");
    const K3Class& c2 = std::get<K3Class>(second);
    if (c2.prime != prime) throw std::invalid_argument("factors have mismatched primes");
    if (!validate(c2)) throw std::invalid_argument("second factor is not an admissible class");
  } else {
    throw std::invalid_argument("dimension must be 3 or 4");
  }
}

std::vector<HodgeDiamond> k3_eigenspaces(int p, int r) {
  const std::int64_t lambda = (22 - r) / (p - 1);
  std::vector<HodgeDiamond> out;
  out.push_back(HodgeDiamond(2, {{1, 0, 0}, {0, r, 0}, {0, 0, 1}}));
  if (p == 2) {
    out.push_back(HodgeDiamond(2, {{0, 0, 1}, {0, lambda - 2, 0}, {1, 0, 0}}));
    return out;
  }
  // zeta carries H^{2,0}; its conjugate zeta^{p-1} carries H^{0,2}.
  out.push_back(HodgeDiamond(2, {{0, 0, 0}, {0, lambda - 1, 0}, {1, 0, 0}}));
  for (int l = 2; l <= p - 2; ++l) out.push_back(HodgeDiamond::monomial(2, 1, 1, lambda));
  out.push_back(HodgeDiamond(2, {{0, 0, 1}, {0, lambda - 1, 0}, {0, 0, 0}}));
  return out;
}

std::vector<HodgeDiamond> elliptic_eigenspaces() {
  return {HodgeDiamond(1, {{1, 0}, {0, 1}}), HodgeDiamond::monomial(1, 1, 0), HodgeDiamond::monomial(1, 0, 1)};
}

HodgeDiamond invariant_part(const OrbifoldSpec& spec) {
  spec.check();
  const auto e1 = k3_eigenspaces(spec.prime, spec.first.r);
  const auto e2 = spec.is_threefold() ? elliptic_eigenspaces() : k3_eigenspaces(spec.prime, spec.second_k3().r);
  // (rho1^i, rho2^-i) fixes exactly the products of equal-character pieces.
  HodgeDiamond out(spec.dimension);
  for (std::size_t l = 0; l < e1.size(); ++l) out += mul(e1[l], e2[l]);
  return out;
}

HodgeDiamond codim2_contribution(const OrbifoldSpec& spec, LocusReading reading) {
  spec.check();
  const HodgeDiamond c1 = fixed_curves_polynomial(spec.first, reading);
  if (spec.is_threefold()) {
    const auto& e = std::get<EllipticFactor>(spec.second);
    return codim2_weighted(scale_exact(c1, e.fixed_points), 3, spec.prime);
  }
  const HodgeDiamond c2 = fixed_curves_polynomial(spec.second_k3(), reading);
  return codim2_weighted(mul(c1, c2), 4, spec.prime);
}

HodgeDiamond codim3_contribution(const OrbifoldSpec& spec, LocusReading reading) {
  spec.check();
  const std::int64_t n1 = fixed_locus(spec.first).point_count();
  if (spec.is_threefold()) {
    const auto& e = std::get<EllipticFactor>(spec.second);
    const HodgeDiamond points = HodgeDiamond::monomial(0, 0, 0, checked_mul(e.fixed_points, n1));
    return codim3_weighted(points, 3, spec.prime);
  }
  const std::int64_t n2 = fixed_locus(spec.second_k3()).point_count();
  const HodgeDiamond curves = scale_exact(fixed_curves_polynomial(spec.first, reading), n2) +
                              scale_exact(fixed_curves_polynomial(spec.second_k3(), reading), n1);
  return codim3_weighted(curves, 4, spec.prime);
}

HodgeDiamond codim4_contribution(const OrbifoldSpec& spec) {
  spec.check();
  HodgeDiamond out(spec.dimension);
  if (spec.is_threefold() || spec.prime == 2) return out;
  const ShiftCounts n =
      shift_counts(spec.prime, fixed_locus(spec.first).point_types, fixed_locus(spec.second_k3()).point_types);
  out.at(1, 1) = n.n1;
  out.at(2, 2) = n.n2;
  out.at(3, 3) = n.n3;
  return out;
}

FundamentalGroup fundamental_group(const OrbifoldSpec& spec) {
  // G acts freely iff some factor has an empty fixed locus.
  auto empty = [](const K3Class& c) { return c.special == SpecialLocus::EmptyFixedLocus; };
  if (empty(spec.first) || (!spec.is_threefold() && empty(spec.second_k3()))) return FundamentalGroup::CyclicOfOrderP;
  return FundamentalGroup::Trivial;
}

bool has_crepant_resolution(const OrbifoldSpec& spec) {
  if (spec.prime == 2) return true;
  if (spec.is_threefold()) return true;
  return spec.prime == 3 && spec.first.r == 2 && spec.second_k3().r == 2;
}

OrbifoldReport build(const OrbifoldSpec& spec, LocusReading reading) {
  spec.check();
  OrbifoldReport rep;
  rep.spec = spec;
  rep.summands.push_back({"invariant", invariant_part(spec)});
  rep.summands.push_back({"codim2", codim2_contribution(spec, reading)});
  rep.summands.push_back({"codim3", codim3_contribution(spec, reading)});
  if (!spec.is_threefold()) rep.summands.push_back({"codim4", codim4_contribution(spec)});

  rep.diamond = HodgeDiamond(spec.dimension);
  for (const Summand& s : rep.summands) rep.diamond += s.part;
  rep.euler = euler_characteristic(rep.diamond);
  rep.fundamental_group = fundamental_group(spec);
  rep.crepant_resolution = has_crepant_resolution(spec);

  const HodgeDiamond& d = rep.diamond;
  const int n = spec.dimension;
  if (!d.is_nonnegative() || !d.has_hodge_symmetry() || !d.has_poincare_duality() || d(0, 0) != 1 || d(n, 0) != 1)
    throw std::logic_error("assembled diamond is not a Calabi-Yau diamond: " + d.to_string());
  return rep;
}

}  // namespace bv
