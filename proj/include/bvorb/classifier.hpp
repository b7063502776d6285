#pragma once

/**
 * @file classifier.hpp
 * @brief Exhaustive enumeration of Borcea-Voisin orbifolds and global checks.
 *
 * Fourfold inputs are unordered pairs {c1, c2} of catalog classes, with
 * repetition, taken in canonical order (c1 <= c2). Threefold inputs are the
 * p = 3 classes paired with the elliptic factor. A topological family is an
 * equivalence class of inputs with equal Hodge diamonds.
 */

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bvorb/orbifold.hpp"

namespace bv {

struct FamilyEntry {
  OrbifoldReport representative;  // first input in canonical order
  std::int64_t multiplicity = 0;
};

struct FamilyTable {
  int prime = 0;
  int dimension = 4;
  std::vector<FamilyEntry> entries;  // ordered by first appearance
  std::int64_t input_count = 0;
  std::int64_t distinct_count = 0;
  std::int64_t chi_min = 0;
  std::int64_t chi_max = 0;

  /// Sorted distinct Euler characteristics.
  std::vector<std::int64_t> euler_values() const;
};

/// Canonical list of inputs: all unordered pairs for dim 4, singletons for dim 3.
std::vector<OrbifoldSpec> enumerate_specs(int p, int dim);

/// Builds every input (in parallel) and groups by diamond. Throws
/// std::invalid_argument for dim 3 with p != 3 or an unsupported prime.
FamilyTable enumerate(int p, int dim);

struct MirrorPair {
  OrbifoldSpec x;
  OrbifoldSpec partner;
};

struct MirrorCheckReport {
  std::int64_t pairs_checked = 0;
  std::vector<MirrorPair> verified;        // partner present, reflection holds
  std::vector<MirrorPair> violations;      // partner present, reflection fails
  std::vector<OrbifoldSpec> absent;        // partner not in the catalog
  std::vector<OrbifoldSpec> self_mirrors;  // partner equals the input

  bool ok() const { return violations.empty(); }
};

/// For every p = 2 pair whose partner (20-r1, a1, 20-r2, a2) is in the catalog,
/// checks h^{p,q}(X) = h^{4-p,q}(partner).
MirrorCheckReport mirror_check_p2();

struct MirrorSearchResult {
  int prime = 0;
  int dimension = 4;
  /// An m for which (r1, r2) -> (m-r1, m-r2) maps every partnered diamond to
  /// its reflection, if any.
  std::optional<int> involution;
  /// Every m for which partnered inputs satisfy chi(partner) = (-1)^dim chi(X).
  std::vector<int> chi_compatible;
};

inline constexpr int kMirrorWindowMin = 0;
inline constexpr int kMirrorWindowMax = 40;

/// Scans m over [0, 40]. An m is only considered when it pairs at least one
/// input with a different input.
MirrorSearchResult mirror_search(int p, int dim);

/// Crepant-resolution predicate for every unordered fourfold pair.
std::vector<std::pair<OrbifoldSpec, bool>> crepant_survey(int p);

}  // namespace bv
