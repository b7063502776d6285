#include "bvorb/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bvorb/ages.hpp"
#include "bvorb/catalog.hpp"
#include "bvorb/classifier.hpp"
#include "bvorb/io.hpp"
#include "bvorb/orbifold.hpp"
#include "bvorb/verify.hpp"

namespace bv::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

K3Class lookup(int p, int r, int a) {
  auto c = find_class(p, r, a);
  if (!c)
    throw UsageError("(r, a) = (" + std::to_string(r) + ", " + std::to_string(a) + ") is not in the catalog for p = " +
                     std::to_string(p));
  return *c;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed, const std::string& cmd) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw UsageError("format '" + fmt + "' is not supported by '" + cmd + "'");
}

void emit_table(std::ostream& out, const io::Table& t, const std::string& fmt) {
  out << (fmt == "csv" ? t.to_csv() : t.to_markdown());
}

void emit_report(std::ostream& out, const OrbifoldReport& rep, const std::string& fmt) {
  if (fmt == "json") {
    out << io::to_json(rep).dump(2) << '\n';
    return;
  }
  if (fmt == "text-diamond") {
    out << io::render_text_diamond(rep.diamond);
  } else {
    out << io::render_markdown_grid(rep.diamond);
  }
  out << "chi = " << rep.euler << '\n'
      << "pi1 = " << io::fundamental_group_name(rep.fundamental_group, rep.spec.prime) << '\n'
      << "crepant resolution: " << (rep.crepant_resolution ? "yes" : "no") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borcea-Voisin orbifold Hodge diamonds", "bvorb"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"json", "csv", "markdown", "text-diamond"};
  std::string fmt = "json";
  int p = 0, dim = 4, r1 = 0, a1 = 0, r2 = 0, a2 = 0;
  std::optional<int> p_opt;
  std::function<int()> action;

  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", fmt, "Output format")->check(CLI::IsMember(formats))->default_str(def);
    sub->preparse_callback([&fmt, def](std::size_t) { fmt = def; });
  };

  auto* catalog = app.add_subcommand("catalog", "List admissible (p, r, a) classes with fixed-locus data");
  catalog->add_option("--p", p_opt, "Prime (all primes when omitted)");
  add_format(catalog, "json");
  catalog->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "csv", "markdown"}, "catalog");
      std::vector<int> primes;
      if (p_opt) {
        if (!is_supported_prime(*p_opt)) throw UsageError("unsupported prime " + std::to_string(*p_opt));
        primes.push_back(*p_opt);
      } else {
        primes.assign(supported_primes().begin(), supported_primes().end());
      }
      if (fmt == "json") {
        io::Json arr = io::Json::array();
        for (int q : primes)
          for (const auto& c : all_classes(q)) {
            io::Json j = io::to_json(c);
            j["fixed_locus"] = io::to_json(fixed_locus(c));
            arr.push_back(std::move(j));
          }
        out << arr.dump(2) << '\n';
      } else {
        io::Table all;
        for (int q : primes) {
          auto t = io::catalog_table(q);
          all.header = t.header;
          all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
        }
        emit_table(out, all, fmt);
      }
      return 0;
    };
  });

  auto* threefold = app.add_subcommand("threefold", "Build the K3 x E orbifold for p = 3");
  threefold->add_option("--p", p, "Prime (must be 3)")->default_val(3);
  threefold->add_option("--r", r1, "Rank r")->required();
  threefold->add_option("--a", a1, "Exponent a")->required();
  add_format(threefold, "json");
  threefold->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "markdown", "text-diamond"}, "threefold");
      if (p != 3) throw UsageError("threefolds are only built for p = 3");
      emit_report(out, build(OrbifoldSpec::threefold(lookup(3, r1, a1))), fmt);
      return 0;
    };
  });

  auto* fourfold = app.add_subcommand("fourfold", "Build the orbifold of a pair of K3 surfaces");
  fourfold->add_option("--p", p, "Prime")->required();
  fourfold->add_option("--r1", r1, "Rank of the first factor")->required();
  fourfold->add_option("--a1", a1, "Exponent of the first factor")->required();
  fourfold->add_option("--r2", r2, "Rank of the second factor")->required();
  fourfold->add_option("--a2", a2, "Exponent of the second factor")->required();
  std::string locus = "table";
  fourfold->add_option("--locus", locus, "Fixed-locus reading: table or geometric")
      ->check(CLI::IsMember({"table", "geometric"}))
      ->default_str("table");
  add_format(fourfold, "json");
  fourfold->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "markdown", "text-diamond"}, "fourfold");
      const auto reading = locus == "geometric" ? LocusReading::Geometric : LocusReading::GenusFormula;
      emit_report(out, build(OrbifoldSpec::fourfold(lookup(p, r1, a1), lookup(p, r2, a2)), reading), fmt);
      return 0;
    };
  });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate all inputs and group them into families");
  enumerate_cmd->add_option("--p", p, "Prime")->required();
  enumerate_cmd->add_option("--dim", dim, "Dimension (3 or 4)")->default_val(4);
  add_format(enumerate_cmd, "json");
  enumerate_cmd->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "csv", "markdown"}, "enumerate");
      if (!is_supported_prime(p)) throw UsageError("unsupported prime " + std::to_string(p));
      if (dim != 3 && dim != 4) throw UsageError("dimension must be 3 or 4");
      if (dim == 3 && p != 3) throw UsageError("threefolds are only enumerated for p = 3");
      const FamilyTable t = enumerate(p, dim);
      if (fmt == "json")
        out << io::to_json(t).dump(2) << '\n';
      else
        emit_table(out, io::family_table(t), fmt);
      return 0;
    };
  });

  std::optional<int> ar1, aa1, ar2, aa2;
  auto* ages = app.add_subcommand("ages", "Print P2(p) and the isolated-point shift counts");
  ages->add_option("--p", p, "Odd prime")->required();
  ages->add_option("--r1", ar1, "Restrict to one pair: rank of the first factor");
  ages->add_option("--a1", aa1, "Exponent of the first factor");
  ages->add_option("--r2", ar2, "Rank of the second factor");
  ages->add_option("--a2", aa2, "Exponent of the second factor");
  add_format(ages, "json");
  ages->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "csv", "markdown"}, "ages");
      if (p == 2 || !is_supported_prime(p)) throw UsageError("ages needs an odd supported prime");
      const bool any = ar1 || aa1 || ar2 || aa2;
      if (any && !(ar1 && aa1 && ar2 && aa2)) throw UsageError("give all of --r1 --a1 --r2 --a2 or none");
      std::vector<OrbifoldSpec> specs;
      if (any) {
        auto c1 = lookup(p, *ar1, *aa1), c2 = lookup(p, *ar2, *aa2);
        if (c2 < c1) std::swap(c1, c2);
        specs.push_back(OrbifoldSpec::fourfold(c1, c2));
      } else {
        specs = enumerate_specs(p, 4);
      }
      const IntMatrix& m = p2_matrix(p);
      io::Table t{{"p", "r1", "a1", "r2", "a2", "N1", "N2", "N3"}, {}};
      io::Json rows = io::Json::array();
      for (const auto& s : specs) {
        const auto counts =
            shift_counts(p, fixed_locus(s.first).point_types, fixed_locus(s.second_k3()).point_types);
        io::Json j = io::to_json(s);
        j.erase("dim");
        j.update(io::to_json(counts));
        rows.push_back(std::move(j));
        t.rows.push_back({std::to_string(p), std::to_string(s.first.r), std::to_string(s.first.a),
                          std::to_string(s.second_k3().r), std::to_string(s.second_k3().a), std::to_string(counts.n1),
                          std::to_string(counts.n2), std::to_string(counts.n3)});
      }
      if (fmt == "json") {
        out << io::Json{{"p", p}, {"P2", io::to_json(m)}, {"shift_counts", std::move(rows)}}.dump(2) << '\n';
      } else if (fmt == "csv") {
        out << t.to_csv();
      } else {
        io::Table mt;
        mt.header.push_back("P2");
        for (std::size_t j = 0; j < m.size(); ++j) mt.header.push_back(std::to_string(j + 1));
        for (std::size_t i = 0; i < m.size(); ++i) {
          std::vector<std::string> row{std::to_string(i + 1)};
          for (auto v : m[i]) row.push_back(std::to_string(v));
          mt.rows.push_back(std::move(row));
        }
        out << mt.to_markdown() << '\n' << t.to_markdown();
      }
      return 0;
    };
  });

  int mirror_p = 2;
  auto* mirror = app.add_subcommand("mirror", "Check the p = 2 mirror map or search for one at odd p");
  mirror->add_option("--p", mirror_p, "Prime")->default_val(2);
  mirror->add_option("--dim", dim, "Dimension (3 or 4)")->default_val(4);
  add_format(mirror, "json");
  mirror->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "markdown"}, "mirror");
      if (!is_supported_prime(mirror_p)) throw UsageError("unsupported prime " + std::to_string(mirror_p));
      if (dim != 3 && dim != 4) throw UsageError("dimension must be 3 or 4");
      if (dim == 3 && mirror_p != 3) throw UsageError("threefolds exist only for p = 3");
      if (mirror_p == 2) {
        const auto rep = mirror_check_p2();
        if (fmt == "json") {
          out << io::to_json(rep).dump(2) << '\n';
        } else {
          io::Table t{{"pairs", "verified", "violations", "self-mirror", "no partner"},
                      {{std::to_string(rep.pairs_checked), std::to_string(rep.verified.size()),
                        std::to_string(rep.violations.size()), std::to_string(rep.self_mirrors.size()),
                        std::to_string(rep.absent.size())}}};
          out << t.to_markdown();
        }
        return rep.ok() ? 0 : 1;
      }
      const auto res = mirror_search(mirror_p, dim);
      if (fmt == "json") {
        out << io::to_json(res).dump(2) << '\n';
      } else {
        std::string chis;
        for (int m : res.chi_compatible) chis += (chis.empty() ? "" : " ") + std::to_string(m);
        io::Table t{{"p", "dim", "involution", "chi-compatible m"},
                    {{std::to_string(res.prime), std::to_string(res.dimension),
                      res.involution ? std::to_string(*res.involution) : "none", chis.empty() ? "none" : chis}}};
        out << t.to_markdown();
      }
      return 0;
    };
  });

  auto* crepant = app.add_subcommand("crepant", "Crepant-resolution predicate for every fourfold pair");
  crepant->add_option("--p", p, "Prime")->required();
  add_format(crepant, "json");
  crepant->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "csv", "markdown"}, "crepant");
      if (!is_supported_prime(p)) throw UsageError("unsupported prime " + std::to_string(p));
      const auto survey = crepant_survey(p);
      if (fmt == "json") {
        io::Json arr = io::Json::array();
        for (const auto& [s, ok] : survey) {
          io::Json j = io::to_json(s);
          j["crepant"] = ok;
          arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
      } else {
        emit_table(out, io::crepant_table(survey), fmt);
      }
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the reproduction checks; exit 1 if any fails");
  add_format(verify, "markdown");
  verify->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "csv", "markdown"}, "verify");
      const auto results = run_reproduction_checks();
      if (fmt == "json") {
        out << io::to_json(results).dump(2) << '\n';
      } else {
        io::Table t{{"id", "result", "check", "detail"}, {}};
        for (const auto& r : results) t.rows.push_back({r.id, r.passed ? "PASS" : "FAIL", r.description, r.detail});
        emit_table(out, t, fmt);
      }
      return all_passed(results) ? 0 : 1;
    };
  });

  auto* figures = app.add_subcommand("export-figures", "Export the (r, a) scatter points per prime");
  add_format(figures, "csv");
  figures->callback([&] {
    action = [&] {
      require_format(fmt, {"json", "csv", "markdown"}, "export-figures");
      const std::vector<int> primes(supported_primes().begin(), supported_primes().end());
      if (fmt == "json") {
        io::Json j = io::Json::object();
        for (int q : primes) {
          io::Json pts = io::Json::array();
          for (const auto& c : all_classes(q)) {
            io::Json pt{{"r", c.r}, {"a", c.a}};
            if (c.delta) pt["delta"] = *c.delta;
            pts.push_back(std::move(pt));
          }
          j[std::to_string(q)] = std::move(pts);
        }
        out << j.dump(2) << '\n';
      } else {
        emit_table(out, io::figure_points_table(primes), fmt);
      }
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace bv::cli
