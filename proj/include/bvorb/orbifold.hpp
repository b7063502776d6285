#pragma once

/**
 * @file orbifold.hpp
 * @brief Orbifold Hodge diamonds of Borcea-Voisin quotients.
 *
 * For X = X1 x X2 and G = ker(character) of prime order p,
 *
 *     h_orb(X/G) = h(X)^G + sum_{Lambda} sum_{i=1}^{p-1} (st)^{age(gamma^i, Lambda)} h(Lambda)
 *
 * The invariant part is assembled from the eigenspace decomposition of each
 * factor; the twisted sectors are grouped by the codimension of the fixed
 * component (2, 3 and, for fourfolds, 4).
 */

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bvorb/catalog.hpp"
#include "bvorb/hodge.hpp"

namespace bv {

struct OrbifoldSpec {
  int dimension = 4;
  int prime = 0;
  K3Class first;
  std::variant<K3Class, EllipticFactor> second;

  /// K3 x E with the order-3 elliptic curve; requires c.prime == 3.
  static OrbifoldSpec threefold(const K3Class& c);
  static OrbifoldSpec fourfold(const K3Class& c1, const K3Class& c2);

  bool is_threefold() const { return dimension == 3; }
  const K3Class& second_k3() const { return std::get<K3Class>(second); }

  /// Throws std::invalid_argument if the factors are inconsistent.
  void check() const;
};

enum class FundamentalGroup { Trivial, CyclicOfOrderP };

struct Summand {
  std::string label;
  HodgeDiamond part;
};

struct OrbifoldReport {
  OrbifoldSpec spec;
  HodgeDiamond diamond;
  std::int64_t euler = 0;
  std::vector<Summand> summands;
  FundamentalGroup fundamental_group = FundamentalGroup::Trivial;
  bool crepant_resolution = false;

  std::int64_t h(int i, int j) const { return diamond(i, j); }
};

/// Eigenspace pieces h(S)[zeta^l] for l = 0..p-1 of a K3 surface of rank r.
std::vector<HodgeDiamond> k3_eigenspaces(int p, int r);
/// Eigenspace pieces of the order-3 elliptic curve.
std::vector<HodgeDiamond> elliptic_eigenspaces();

HodgeDiamond invariant_part(const OrbifoldSpec& spec);
HodgeDiamond codim2_contribution(const OrbifoldSpec& spec, LocusReading reading = LocusReading::GenusFormula);
HodgeDiamond codim3_contribution(const OrbifoldSpec& spec, LocusReading reading = LocusReading::GenusFormula);
/// Zero for threefolds.
HodgeDiamond codim4_contribution(const OrbifoldSpec& spec);

FundamentalGroup fundamental_group(const OrbifoldSpec& spec);
bool has_crepant_resolution(const OrbifoldSpec& spec);

/// Assembles and checks the full report. Throws std::logic_error if the
/// assembled diamond fails non-negativity, Hodge symmetry or Poincare duality.
OrbifoldReport build(const OrbifoldSpec& spec, LocusReading reading = LocusReading::GenusFormula);

}  // namespace bv
