#include "bvorb/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace bv {

namespace {

// Builds every spec; results keep the input order whatever the scheduling.
std::vector<OrbifoldReport> build_all(const std::vector<OrbifoldSpec>& specs) {
  std::vector<std::optional<OrbifoldReport>> slots(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        slots[i] = build(specs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto nthreads = static_cast<unsigned>(std::min<std::size_t>(std::min(hw, 8u), specs.size() / 64 + 1));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<OrbifoldReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::optional<K3Class> reflected(const K3Class& c, int m) { return find_class(c.prime, m - c.r, c.a); }

// Partner of a spec under r -> m - r, in canonical order; nullopt if absent.
std::optional<OrbifoldSpec> partner_of(const OrbifoldSpec& s, int m) {
  auto c1 = reflected(s.first, m);
  if (!c1) return std::nullopt;
  if (s.is_threefold()) return OrbifoldSpec::threefold(*c1);
  auto c2 = reflected(s.second_k3(), m);
  if (!c2) return std::nullopt;
  if (*c2 < *c1) std::swap(c1, c2);
  return OrbifoldSpec::fourfold(*c1, *c2);
}

bool same_input(const OrbifoldSpec& x, const OrbifoldSpec& y) {
  if (x.dimension != y.dimension || !(x.first == y.first)) return false;
  return x.is_threefold() || x.second_k3() == y.second_k3();
}

bool is_reflection(const HodgeDiamond& x, const HodgeDiamond& partner) { return mirror_reflect(x) == partner; }

std::string key_of(const OrbifoldSpec& s) {
  std::string k = std::to_string(s.first.r) + "," + std::to_string(s.first.a);
  if (!s.is_threefold()) k += ";" + std::to_string(s.second_k3().r) + "," + std::to_string(s.second_k3().a);
  return k;
}

}  // namespace

std::vector<std::int64_t> FamilyTable::euler_values() const {
  std::vector<std::int64_t> v;
  for (const auto& e : entries) v.push_back(e.representative.euler);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<OrbifoldSpec> enumerate_specs(int p, int dim) {
  const auto& classes = all_classes(p);
  std::vector<OrbifoldSpec> specs;
  if (dim == 3) {
    if (p != 3) throw std::invalid_argument("threefolds are only enumerated for p = 3");
    for (const auto& c : classes) specs.push_back(OrbifoldSpec::threefold(c));
  } else if (dim == 4) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i; j < classes.size(); ++j) specs.push_back(OrbifoldSpec::fourfold(classes[i], classes[j]));
  } else {
    throw std::invalid_argument("dimension must be 3 or 4");
  }
  return specs;
}

FamilyTable enumerate(int p, int dim) {
  const auto specs = enumerate_specs(p, dim);
  auto reports = build_all(specs);

  FamilyTable table;
  table.prime = p;
  table.dimension = dim;
  table.input_count = static_cast<std::int64_t>(reports.size());
  std::map<HodgeDiamond, std::size_t> index;
  for (auto& rep : reports) {
    auto [it, inserted] = index.try_emplace(rep.diamond, table.entries.size());
    if (inserted) table.entries.push_back({std::move(rep), 0});
    ++table.entries[it->second].multiplicity;
  }
  table.distinct_count = static_cast<std::int64_t>(table.entries.size());
  if (!table.entries.empty()) {
    auto [lo, hi] = std::minmax_element(table.entries.begin(), table.entries.end(), [](const auto& x, const auto& y) {
      return x.representative.euler < y.representative.euler;
    });
    table.chi_min = lo->representative.euler;
    table.chi_max = hi->representative.euler;
  }
  return table;
}

MirrorCheckReport mirror_check_p2() {
  const auto specs = enumerate_specs(2, 4);
  const auto reports = build_all(specs);
  std::map<std::string, const OrbifoldReport*> by_key;
  for (const auto& r : reports) by_key[key_of(r.spec)] = &r;

  MirrorCheckReport out;
  for (const auto& rep : reports) {
    ++out.pairs_checked;
    auto partner = partner_of(rep.spec, 20);
    if (!partner) {
      out.absent.push_back(rep.spec);
      continue;
    }
    const OrbifoldReport& other = *by_key.at(key_of(*partner));
    if (same_input(rep.spec, *partner)) out.self_mirrors.push_back(rep.spec);
    if (is_reflection(rep.diamond, other.diamond))
      out.verified.push_back({rep.spec, *partner});
    else
      out.violations.push_back({rep.spec, *partner});
  }
  return out;
}

MirrorSearchResult mirror_search(int p, int dim) {
  const auto specs = enumerate_specs(p, dim);
  const auto reports = build_all(specs);
  std::map<std::string, const OrbifoldReport*> by_key;
  for (const auto& r : reports) by_key[key_of(r.spec)] = &r;
  const std::int64_t sign = dim % 2 == 0 ? 1 : -1;

  MirrorSearchResult out;
  out.prime = p;
  out.dimension = dim;
  for (int m = kMirrorWindowMin; m <= kMirrorWindowMax; ++m) {
    bool chi_ok = true;
    bool mirror_ok = true;
    std::int64_t nontrivial = 0;
    for (const auto& rep : reports) {
      auto partner = partner_of(rep.spec, m);
      if (!partner) continue;
      if (!same_input(rep.spec, *partner)) ++nontrivial;
      const OrbifoldReport& other = *by_key.at(key_of(*partner));
      if (other.euler != sign * rep.euler) chi_ok = false;
      if (!is_reflection(rep.diamond, other.diamond)) mirror_ok = false;
    }
    if (nontrivial == 0) continue;
    if (chi_ok) out.chi_compatible.push_back(m);
    if (mirror_ok && !out.involution) out.involution = m;
  }
  return out;
}

std::vector<std::pair<OrbifoldSpec, bool>> crepant_survey(int p) {
  std::vector<std::pair<OrbifoldSpec, bool>> out;
  for (const auto& s : enumerate_specs(p, 4)) out.emplace_back(s, has_crepant_resolution(s));
  return out;
}

}  // namespace bv
