#include "bvorb/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bvorb/ages.hpp"
#include "bvorb/catalog.hpp"
#include "bvorb/classifier.hpp"
#include "bvorb/orbifold.hpp"
#include "bvorb/reference.hpp"

namespace bv {

namespace {

constexpr int kOddPrimes[] = {3, 5, 7, 11, 13, 17, 19};
constexpr int kClosedFormPrimes[] = {3, 5, 7, 11};

std::string label(const OrbifoldSpec& s) {
  std::ostringstream os;
  os << "p=" << s.prime << " (" << s.first.r << "," << s.first.a << ")";
  if (s.is_threefold())
    os << "xE";
  else
    os << "x(" << s.second_k3().r << "," << s.second_k3().a << ")";
  return os.str();
}

template <class T>
std::string join(const T& values) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// Builds every fourfold and family table once per run; the checks share them.
class Corpus {
 public:
  const std::vector<OrbifoldReport>& fourfolds(int p) {
    auto it = fourfolds_.find(p);
    if (it == fourfolds_.end()) {
      std::vector<OrbifoldReport> reps;
      for (const auto& s : enumerate_specs(p, 4)) reps.push_back(build(s));
      it = fourfolds_.emplace(p, std::move(reps)).first;
    }
    return it->second;
  }

  const FamilyTable& families(int p) {
    auto it = families_.find(p);
    if (it == families_.end()) it = families_.emplace(p, enumerate(p, 4)).first;
    return it->second;
  }

 private:
  std::map<int, std::vector<OrbifoldReport>> fourfolds_;
  std::map<int, FamilyTable> families_;
};

class Collector {
 public:
  void run(std::string id, std::string description, const std::function<std::string(bool&)>& body) {
    CheckResult r{std::move(id), std::move(description), true, {}};
    try {
      r.detail = body(r.passed);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Records the first failure message; later ones are dropped.
struct FirstFailure {
  bool& ok;
  std::string message;
  void fail(const std::string& m) {
    if (ok) message = m;
    ok = false;
  }
};

bool is_generic_p2(const OrbifoldSpec& s) {
  return s.first.special != SpecialLocus::EmptyFixedLocus && s.second_k3().special != SpecialLocus::EmptyFixedLocus;
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<CheckResult> run_reproduction_checks() {
  Collector c;
  Corpus corpus;

  c.run("1", "catalog sizes 64,24,7,5,3,1,1,1 and every class admissible", [&](bool& ok) {
    FirstFailure f{ok, {}};
    std::vector<std::size_t> sizes;
    for (int p : supported_primes()) {
      const auto& classes = all_classes(p);
      sizes.push_back(classes.size());
      if (static_cast<std::int64_t>(classes.size()) != reference::published_catalog_size(p))
        f.fail("p=" + std::to_string(p) + " has " + std::to_string(classes.size()) + " classes");
      for (const auto& k : classes) {
        const int excess = 22 - k.r - (p - 1) * k.a;
        if (excess < 0 || excess % (2 * (p - 1)) != 0 || !validate(k))
          f.fail("inadmissible (" + std::to_string(k.r) + "," + std::to_string(k.a) + ") at p=" + std::to_string(p));
      }
    }
    return ok ? "sizes " + join(sizes) : f.message;
  });

  c.run("2", "brute-forced P2(p) equals the printed matrices", [&](bool& ok) {
    FirstFailure f{ok, {}};
    for (int p : kOddPrimes)
      if (p2_matrix(p) != reference::printed_p2_matrix(p)) f.fail("mismatch at p=" + std::to_string(p));
    return ok ? std::string("p = 3..19 agree entrywise") : f.message;
  });

  c.run("3", "shift counts equal the closed-form table for all pairs, odd p", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int pairs = 0;
    for (int p : kOddPrimes)
      for (const auto& s : enumerate_specs(p, 4)) {
        const auto f1 = fixed_locus(s.first), f2 = fixed_locus(s.second_k3());
        ++pairs;
        if (shift_counts(p, f1.point_types, f2.point_types) != closed_form_counts(p, f1.alpha, f2.alpha))
          f.fail("mismatch at " + label(s));
      }
    return ok ? std::to_string(pairs) + " pairs agree" : f.message;
  });

  c.run("4", "threefolds: h11 = 7+4r-3a, h21 = 43-2r-3a, chi = 12r-72", [&](bool& ok) {
    FirstFailure f{ok, {}};
    for (const auto& k : all_classes(3)) {
      const auto rep = build(OrbifoldSpec::threefold(k));
      if (rep.diamond != reference::threefold_diamond(k.r, k.a) || rep.euler != reference::threefold_chi(k.r))
        f.fail("mismatch at " + label(rep.spec) + ": " + rep.diamond.to_string());
    }
    return ok ? std::string("24 classes agree") : f.message;
  });

  c.run("5a", "p=2: entries a, b, d, e match the closed forms on all generic pairs", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int n = 0;
    for (const auto& rep : corpus.fourfolds(2)) {
      if (!is_generic_p2(rep.spec)) continue;
      ++n;
      const auto& s = rep.spec;
      const auto x = reference::fourfold_entries(2, s.first.r, s.first.a, s.second_k3().r, s.second_k3().a);
      if (rep.diamond != reference::fourfold_diamond(x)) f.fail("mismatch at " + label(s) + ": " + rep.diamond.to_string());
    }
    return ok ? std::to_string(n) + " generic pairs agree" : f.message;
  });

  c.run("5b", "p=2: chi = 888 - 60r1 - 60r2 + 6r1r2 over all 2080 unordered pairs", [&](bool& ok) {
    FirstFailure f{ok, {}};
    const auto& reps = corpus.fourfolds(2);
    if (reps.size() != 2080) f.fail(std::to_string(reps.size()) + " pairs instead of 2080");
    for (const auto& rep : reps)
      if (Fraction(rep.euler) != reference::fourfold_chi(2, rep.spec.first.r, rep.spec.second_k3().r))
        f.fail("mismatch at " + label(rep.spec));
    return ok ? std::to_string(reps.size()) + " pairs agree" : f.message;
  });

  c.run("5c", "p=2: chi range is [-92, 888]", [&](bool& ok) {
    const auto& t = corpus.families(2);
    const auto pub = *reference::published_enumeration(2);
    ok = t.chi_min == pub.chi_min && t.chi_max == pub.chi_max;
    return "computed [" + std::to_string(t.chi_min) + ", " + std::to_string(t.chi_max) + "]";
  });

  c.run("5d", "p=2: the smallest |chi| values are {-6, 0, 18}", [&](bool& ok) {
    auto values = corpus.families(2).euler_values();
    std::stable_sort(values.begin(), values.end(),
                     [](std::int64_t x, std::int64_t y) { return std::llabs(x) < std::llabs(y); });
    values.resize(std::min<std::size_t>(3, values.size()));
    const std::set<std::int64_t> got(values.begin(), values.end());
    ok = got == std::set<std::int64_t>{-6, 0, 18};
    return "computed " + join(got);
  });

  c.run("5e", "p=2: (10,10) factor gives the free-action diamond (center 204, chi 288)", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int n = 0;
    for (const auto& rep : corpus.fourfolds(2)) {
      if (is_generic_p2(rep.spec)) continue;
      ++n;
      const auto& s = rep.spec;
      const int other = s.first.special == SpecialLocus::EmptyFixedLocus ? s.second_k3().r : s.first.r;
      if (rep.diamond != reference::p2_free_action_diamond(other) || rep.euler != 288)
        f.fail("mismatch at " + label(s) + ": " + rep.diamond.to_string());
    }
    return ok ? std::to_string(n) + " pairs agree" : f.message;
  });

  c.run("6a", "odd p: chi closed forms hold for every pair, p = 3, 5, 7, 11", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int n = 0;
    for (int p : kClosedFormPrimes)
      for (const auto& rep : corpus.fourfolds(p)) {
        ++n;
        if (Fraction(rep.euler) != reference::fourfold_chi(p, rep.spec.first.r, rep.spec.second_k3().r))
          f.fail("mismatch at " + label(rep.spec));
      }
    return ok ? std::to_string(n) + " pairs agree" : f.message;
  });

  c.run("6b", "family counts 299 / 28 / 15 / 6 for p = 3 / 5 / 7 / 11", [&](bool& ok) {
    std::vector<std::int64_t> got;
    for (int p : kClosedFormPrimes) {
      got.push_back(corpus.families(p).distinct_count);
      if (got.back() != reference::published_enumeration(p)->families) ok = false;
    }
    return "computed " + join(got);
  });

  c.run("6c", "chi ranges [-144,1368], [24,1848], [144,2064], [96,1896]", [&](bool& ok) {
    std::ostringstream os;
    for (int p : kClosedFormPrimes) {
      const auto& t = corpus.families(p);
      const auto pub = *reference::published_enumeration(p);
      if (t.chi_min != pub.chi_min || t.chi_max != pub.chi_max) ok = false;
      os << "p=" << p << " [" << t.chi_min << "," << t.chi_max << "] ";
    }
    return os.str();
  });

  c.run("6d", "single families for p = 13, 17, 19 (404/1372, 264/844, 184/564)", [&](bool& ok) {
    std::ostringstream os;
    for (int p : {13, 17, 19}) {
      const auto& t = corpus.families(p);
      const auto pub = *reference::published_enumeration(p);
      if (t.distinct_count != 1 || t.entries[0].representative.diamond != reference::single_family_diamond(p) ||
          t.chi_min != pub.chi_min)
        ok = false;
      os << "p=" << p << " chi=" << t.chi_min << " ";
    }
    os << "(tabulated curve counts; the Lefschetz-consistent fixed locus gives chi";
    for (int p : {13, 17, 19}) {
      const auto& c = all_classes(p).front();
      os << ' ' << build(OrbifoldSpec::fourfold(c, c), LocusReading::Geometric).euler;
    }
    os << ')';
    return os.str();
  });

  c.run("7a", "p=2 mirror closure: h^{p,q}(X) = h^{4-p,q}(partner) when the partner exists", [&](bool& ok) {
    const auto rep = mirror_check_p2();
    ok = rep.ok() && !rep.verified.empty();
    std::ostringstream os;
    os << rep.verified.size() << " verified, " << rep.violations.size() << " violations, " << rep.absent.size()
       << " without partner";
    if (!rep.violations.empty()) os << "; first violation " << label(rep.violations.front().x);
    return os.str();
  });

  c.run("7b", "no mirror involution for any odd p", [&](bool& ok) {
    std::ostringstream os;
    for (int p : kOddPrimes) {
      const auto r = mirror_search(p, 4);
      if (r.involution) {
        ok = false;
        os << "p=" << p << " m=" << *r.involution << " ";
      }
    }
    if (mirror_search(3, 3).involution) {
      ok = false;
      os << "p=3 threefold ";
    }
    return ok ? std::string("none found in m = 0..40") : "found: " + os.str();
  });

  c.run("7c", "p=3, m=12: threefold chi opposite, fourfold chi identical", [&](bool& ok) {
    const auto three = mirror_search(3, 3);
    const auto four = mirror_search(3, 4);
    auto has12 = [](const MirrorSearchResult& r) {
      return std::find(r.chi_compatible.begin(), r.chi_compatible.end(), 12) != r.chi_compatible.end();
    };
    ok = has12(three) && has12(four);
    return "chi-compatible m: threefold " + join(three.chi_compatible) + ", fourfold " + join(four.chi_compatible);
  });

  c.run("8", "crepant predicate true exactly for p=2 and for p=3 with r1=r2=2", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int yes = 0;
    for (int p : supported_primes())
      for (const auto& [s, crepant] : crepant_survey(p)) {
        const bool expected = p == 2 || (p == 3 && s.first.r == 2 && s.second_k3().r == 2);
        yes += crepant;
        if (crepant != expected) f.fail("mismatch at " + label(s));
      }
    return ok ? std::to_string(yes) + " pairs admit a crepant resolution" : f.message;
  });

  c.run("9", "fundamental group Z/2 exactly when p=2 and a factor is (10,10)", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int nontrivial = 0;
    for (int p : supported_primes())
      for (const auto& rep : corpus.fourfolds(p)) {
        const auto& s = rep.spec;
        const bool expected = p == 2 && ((s.first.r == 10 && s.first.a == 10) ||
                                         (s.second_k3().r == 10 && s.second_k3().a == 10));
        const bool got = rep.fundamental_group == FundamentalGroup::CyclicOfOrderP;
        nontrivial += got;
        if (got != expected) f.fail("mismatch at " + label(s));
      }
    for (const auto& k : all_classes(3))
      if (build(OrbifoldSpec::threefold(k)).fundamental_group != FundamentalGroup::Trivial)
        f.fail("threefold not simply connected");
    return ok ? std::to_string(nontrivial) + " pairs with fundamental group Z/2" : f.message;
  });

  c.run("10a", "Hodge symmetry and Poincare duality on every final diamond", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int n = 0;
    auto check = [&](const OrbifoldReport& rep) {
      ++n;
      const auto& d = rep.diamond;
      if (!d.has_hodge_symmetry() || !d.has_poincare_duality() || !d.is_nonnegative()) f.fail(label(rep.spec));
    };
    for (int p : supported_primes())
      for (const auto& rep : corpus.fourfolds(p)) check(rep);
    for (const auto& k : all_classes(3)) check(build(OrbifoldSpec::threefold(k)));
    return ok ? std::to_string(n) + " diamonds checked" : f.message;
  });

  c.run("10b", "age pairing age(g) + age(g^-1) = codim, ages integral in range", [&](bool& ok) {
    FirstFailure f{ok, {}};
    std::int64_t n = 0;
    for (int p : supported_primes())
      for (int len = 2; len <= 4; ++len) {
        std::vector<int> e(len, 0);
        std::function<void(int)> rec = [&](int pos) {
          if (pos == len) {
            int sum = 0;
            for (int x : e) sum += x;
            if (sum % p != 0) return;
            const LocalWeights w(p, e);
            const int codim = w.codimension();
            if (codim == 0) return;
            for (int i = 1; i < p; ++i) {
              ++n;
              const Fraction a = age(w, i);
              if (a + age(w, p - i) != Fraction(codim)) f.fail("pairing fails for p=" + std::to_string(p));
              if (!a.is_integer() || a < Fraction(1) || a > Fraction(codim - 1)) f.fail("age out of range");
            }
            return;
          }
          for (int x = 0; x < p; ++x) {
            e[pos] = x;
            rec(pos + 1);
          }
        };
        rec(0);
      }
    return ok ? std::to_string(n) + " (weight, element) cases" : f.message;
  });

  c.run("10c", "N1 = N3 and N1 + N2 + N3 = (p-1) * #points for every pair", [&](bool& ok) {
    FirstFailure f{ok, {}};
    int n = 0;
    for (int p : kOddPrimes)
      for (const auto& s : enumerate_specs(p, 4)) {
        ++n;
        const auto f1 = fixed_locus(s.first), f2 = fixed_locus(s.second_k3());
        const auto counts = shift_counts(p, f1.point_types, f2.point_types);
        if (counts.n1 != counts.n3 || counts.n1 < 0 || counts.n2 < 0 ||
            counts.n1 + counts.n2 + counts.n3 != (p - 1) * f1.point_count() * f2.point_count())
          f.fail(label(s));
      }
    return ok ? std::to_string(n) + " pairs" : f.message;
  });

  c.run("10d", "chi(a*b) = chi(a) chi(b) on random small diamonds", [&](bool& ok) {
    FirstFailure f{ok, {}};
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> dim(0, 4);
    int trials = 0;
    for (; trials < 2000; ++trials) {
      const int da = dim(rng);
      const int db = std::uniform_int_distribution<int>(0, 4 - da)(rng);
      HodgeDiamond a(da), b(db);
      for (int i = 0; i <= da; ++i)
        for (int j = 0; j <= da; ++j) a.at(i, j) = coeff(rng);
      for (int i = 0; i <= db; ++i)
        for (int j = 0; j <= db; ++j) b.at(i, j) = coeff(rng);
      if (euler_characteristic(mul(a, b)) != euler_characteristic(a) * euler_characteristic(b))
        f.fail(a.to_string() + " * " + b.to_string());
    }
    return ok ? std::to_string(trials) + " random products" : f.message;
  });

  c.run("10e", "(10,8): genus-formula and two-elliptic-curve readings agree", [&](bool& ok) {
    FirstFailure f{ok, {}};
    const auto special = *find_class(2, 10, 8);
    if (fixed_curves_polynomial(special, LocusReading::GenusFormula) !=
        fixed_curves_polynomial(special, LocusReading::Geometric))
      f.fail("curve polynomials differ");
    int n = 0;
    for (const auto& other : all_classes(2)) {
      const auto spec = OrbifoldSpec::fourfold(std::min(special, other), std::max(special, other));
      ++n;
      if (build(spec, LocusReading::GenusFormula).diamond != build(spec, LocusReading::Geometric).diamond)
        f.fail(label(spec));
    }
    return ok ? std::to_string(n) + " pairs agree" : f.message;
  });

  return c.take();
}

}  // namespace bv
