#include "bvorb/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bv::io {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_ints(const std::vector<std::int64_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string center(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  const std::size_t left = (width - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

Json spec_list_json(const std::vector<OrbifoldSpec>& specs) {
  Json arr = Json::array();
  for (const auto& s : specs) arr.push_back(to_json(s));
  return arr;
}

Json mirror_pairs_json(const std::vector<MirrorPair>& pairs) {
  Json arr = Json::array();
  for (const auto& mp : pairs) arr.push_back(Json{{"x", to_json(mp.x)}, {"partner", to_json(mp.partner)}});
  return arr;
}

}  // namespace

Json to_json(const HodgeDiamond& d) {
  Json rows = Json::array();
  for (int i = 0; i <= d.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j <= d.dim(); ++j) row.push_back(d(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", d.dim()}, {"coeffs", std::move(rows)}};
}

HodgeDiamond diamond_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs"))
    throw std::invalid_argument("diamond JSON needs \"dim\" and \"coeffs\"");
  const int dim = j.at("dim").get<int>();
  HodgeDiamond d(dim);
  const Json& rows = j.at("coeffs");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim + 1)
    throw std::invalid_argument("diamond JSON needs dim+1 rows");
  for (int i = 0; i <= dim; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim + 1)
      throw std::invalid_argument("diamond JSON needs dim+1 columns");
    for (int k = 0; k <= dim; ++k) d.at(i, k) = row[k].get<std::int64_t>();
  }
  return d;
}

Json to_json(const K3Class& c) {
  Json j{{"p", c.prime}, {"r", c.r}, {"a", c.a}};
  j["delta"] = c.delta ? Json(*c.delta) : Json(nullptr);
  j["special"] = std::string(to_string(c.special));
  return j;
}

Json to_json(const FixedLocusProfile& f) {
  return Json{{"g", f.genus},         {"k", f.rational_curves}, {"n_total", f.point_count()},
              {"point_types", f.point_types}, {"alpha", f.alpha},       {"lambda", f.lambda}};
}

Json to_json(const OrbifoldSpec& s) {
  Json j{{"dim", s.dimension}, {"p", s.prime}, {"r1", s.first.r}, {"a1", s.first.a}};
  if (s.is_threefold()) {
    j["factor2"] = "elliptic";
  } else {
    j["r2"] = s.second_k3().r;
    j["a2"] = s.second_k3().a;
  }
  return j;
}

std::string fundamental_group_name(FundamentalGroup g, int p) {
  return g == FundamentalGroup::Trivial ? "trivial" : "Z/" + std::to_string(p);
}

Json to_json(const OrbifoldReport& r) {
  Json j = to_json(r.spec);
  const auto& d = r.diamond;
  j["h11"] = d(1, 1);
  j["h21"] = d(2, 1);
  if (r.spec.dimension == 4) {
    j["h31"] = d(3, 1);
    j["h22"] = d(2, 2);
  }
  j["chi"] = r.euler;
  j["pi1"] = fundamental_group_name(r.fundamental_group, r.spec.prime);
  j["crepant"] = r.crepant_resolution;
  j["diamond"] = to_json(d);
  Json summands = Json::object();
  for (const auto& s : r.summands) summands[s.label] = to_json(s.part);
  j["summands"] = std::move(summands);
  return j;
}

Json to_json(const FamilyTable& t) {
  Json fams = Json::array();
  for (const auto& e : t.entries) {
    Json f = to_json(e.representative);
    f.erase("summands");
    f["multiplicity"] = e.multiplicity;
    fams.push_back(std::move(f));
  }
  return Json{{"p", t.prime},          {"dim", t.dimension}, {"inputs", t.input_count},
              {"distinct_count", t.distinct_count}, {"chi_min", t.chi_min}, {"chi_max", t.chi_max},
              {"families", std::move(fams)}};
}

Json to_json(const MirrorCheckReport& r) {
  return Json{{"pairs_checked", r.pairs_checked},
              {"verified", r.verified.size()},
              {"violations", mirror_pairs_json(r.violations)},
              {"self_mirrors", spec_list_json(r.self_mirrors)},
              {"absent_partner", spec_list_json(r.absent)},
              {"ok", r.ok()}};
}

Json to_json(const MirrorSearchResult& r) {
  return Json{{"p", r.prime},
              {"dim", r.dimension},
              {"window", {kMirrorWindowMin, kMirrorWindowMax}},
              {"involution", r.involution ? Json(*r.involution) : Json(nullptr)},
              {"chi_compatible", r.chi_compatible}};
}

Json to_json(const IntMatrix& m) { return Json(m); }

Json to_json(const ShiftCounts& s) { return Json{{"N1", s.n1}, {"N2", s.n2}, {"N3", s.n3}}; }

Json to_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  for (const auto& r : results)
    checks.push_back(Json{{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}});
  return Json{{"passed", all_passed(results)}, {"checks", std::move(checks)}};
}

std::string render_text_diamond(const HodgeDiamond& d) {
  const int n = d.dim();
  std::size_t width = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) width = std::max(width, std::to_string(d(i, j)).size());
  width += 1;
  if (width % 2) ++width;

  std::ostringstream os;
  for (int k = 0; k <= 2 * n; ++k) {
    const int count = std::min(k, 2 * n - k) + 1;
    std::string line(static_cast<std::size_t>(n + 1 - count) * width / 2, ' ');
    for (int i = std::min(k, n); i >= 0 && k - i <= n; --i) line += center(std::to_string(d(i, k - i)), width);
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  return os.str();
}

std::string render_markdown_grid(const HodgeDiamond& d) {
  Table t;
  t.header.push_back("h^{i,j}");
  for (int j = 0; j <= d.dim(); ++j) t.header.push_back("j=" + std::to_string(j));
  for (int i = 0; i <= d.dim(); ++i) {
    std::vector<std::string> row{"i=" + std::to_string(i)};
    for (int j = 0; j <= d.dim(); ++j) row.push_back(std::to_string(d(i, j)));
    t.rows.push_back(std::move(row));
  }
  return t.to_markdown();
}

std::string Table::to_csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string Table::to_markdown() const {
  std::vector<std::size_t> w(header.size(), 3);
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = std::max(w[c], header[c].size());
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());

  std::vector<bool> numeric(w.size(), true);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c)
      if (!r[c].empty() && r[c].find_first_not_of("-0123456789") != std::string::npos) numeric[c] = false;

  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << '|';
    for (std::size_t c = 0; c < w.size(); ++c) {
      const std::string& s = c < cells.size() ? cells[c] : std::string();
      const std::string pad(w[c] - s.size(), ' ');
      os << ' ' << (numeric[c] ? pad + s : s + pad) << " |";
    }
    os << '\n';
  };
  line(header);
  os << '|';
  for (std::size_t c = 0; c < w.size(); ++c)
    os << ' ' << (numeric[c] ? std::string(w[c] - 1, '-') + ':' : std::string(w[c], '-')) << " |";
  os << '\n';
  for (const auto& r : rows) line(r);
  return os.str();
}

Table catalog_table(int p) {
  Table t{{"p", "r", "a", "delta", "g", "k", "n_total", "point_types"}, {}};
  for (const auto& c : all_classes(p)) {
    const auto f = fixed_locus(c);
    t.rows.push_back({std::to_string(c.prime), std::to_string(c.r), std::to_string(c.a),
                      c.delta ? std::to_string(*c.delta) : "", std::to_string(f.genus),
                      std::to_string(f.rational_curves), std::to_string(f.point_count()),
                      join_ints(f.point_types, ';')});
  }
  return t;
}

Table family_table(const FamilyTable& ft) {
  Table t{{"p", "dim", "r1", "a1", "r2", "a2", "h11", "h21", "h31", "h22", "chi", "pi1", "crepant", "multiplicity"},
          {}};
  for (const auto& e : ft.entries) {
    const auto& rep = e.representative;
    const auto& s = rep.spec;
    const auto& d = rep.diamond;
    const bool four = s.dimension == 4;
    t.rows.push_back({std::to_string(s.prime), std::to_string(s.dimension), std::to_string(s.first.r),
                      std::to_string(s.first.a), four ? std::to_string(s.second_k3().r) : "",
                      four ? std::to_string(s.second_k3().a) : "", std::to_string(d(1, 1)), std::to_string(d(2, 1)),
                      four ? std::to_string(d(3, 1)) : "", four ? std::to_string(d(2, 2)) : "",
                      std::to_string(rep.euler), fundamental_group_name(rep.fundamental_group, s.prime),
                      rep.crepant_resolution ? "true" : "false", std::to_string(e.multiplicity)});
  }
  return t;
}

Table crepant_table(const std::vector<std::pair<OrbifoldSpec, bool>>& survey) {
  Table t{{"p", "r1", "a1", "r2", "a2", "crepant"}, {}};
  for (const auto& [s, ok] : survey)
    t.rows.push_back({std::to_string(s.prime), std::to_string(s.first.r), std::to_string(s.first.a),
                      std::to_string(s.second_k3().r), std::to_string(s.second_k3().a), ok ? "true" : "false"});
  return t;
}

Table figure_points_table(const std::vector<int>& primes) {
  Table t{{"p", "r", "a", "delta"}, {}};
  for (int p : primes)
    for (const auto& c : all_classes(p))
      t.rows.push_back({std::to_string(p), std::to_string(c.r), std::to_string(c.a),
                        c.delta ? std::to_string(*c.delta) : ""});
  return t;
}

}  // namespace bv::io
