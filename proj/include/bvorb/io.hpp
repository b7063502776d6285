#pragma once

// JSON, CSV, markdown and text renderings of the library's reports.
// Output is deterministic: fixed key order, no timestamps.

#include <string>
#include <vector>

#include <json.hpp>

#include "bvorb/ages.hpp"
#include "bvorb/catalog.hpp"
#include "bvorb/classifier.hpp"
#include "bvorb/hodge.hpp"
#include "bvorb/orbifold.hpp"
#include "bvorb/verify.hpp"

namespace bv::io {

using Json = nlohmann::ordered_json;

/// {"dim": d, "coeffs": [[h00, h01, ...], ...]} with coeffs[i][j] = h^{i,j}.
Json to_json(const HodgeDiamond& d);
/// Inverse of to_json; throws std::invalid_argument on a malformed document.
HodgeDiamond diamond_from_json(const Json& j);

Json to_json(const K3Class& c);
Json to_json(const FixedLocusProfile& f);
Json to_json(const OrbifoldSpec& s);
Json to_json(const OrbifoldReport& r);
Json to_json(const FamilyTable& t);
Json to_json(const MirrorCheckReport& r);
Json to_json(const MirrorSearchResult& r);
Json to_json(const IntMatrix& m);
Json to_json(const ShiftCounts& s);
Json to_json(const std::vector<CheckResult>& results);

/// Classic rhombus layout, h^{0,0} on top.
std::string render_text_diamond(const HodgeDiamond& d);
/// The (d+1) x (d+1) grid of h^{i,j} as a markdown table.
std::string render_markdown_grid(const HodgeDiamond& d);

/// A simple table rendered as CSV or as an aligned markdown table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_markdown() const;
};

Table catalog_table(int p);
/// One row per family: p, dim, r1, a1, r2, a2, h11, h21, h31, h22, chi, pi1, crepant, multiplicity.
Table family_table(const FamilyTable& t);
Table crepant_table(const std::vector<std::pair<OrbifoldSpec, bool>>& survey);
Table figure_points_table(const std::vector<int>& primes);

std::string fundamental_group_name(FundamentalGroup g, int p);

}  // namespace bv::io
