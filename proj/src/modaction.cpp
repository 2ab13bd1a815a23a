#include "ginv/modaction.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "ginv/errors.hpp"

namespace ginv {

std::vector<Vec> orbit(const Group& G, const Vec& v) {
  std::vector<Vec> out;
  for (std::uint32_t g = 0; g < G->order(); ++g) {
    Vec w = mat_vec(G->element(g), v);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

Submodule cyclic_submodule(const Group& G, const Vec& v) {
  return Submodule::span(from_rows(G->field(), orbit(G, v), G->n()));
}

bool cyclic_contains(const Group& G, const Vec& gen, const Vec& other) {
  return cyclic_submodule(G, gen).contains(other);
}

Submodule homogeneous_component_central(const AlgebraElement& f) {
  require(is_central(f), Err::NotCentral, "component image needs a central element");
  return Submodule(rref(image(action_matrix(f))));
}

Submodule homogeneous_component_general(const AlgebraElement& e) {
  require(is_idempotent(e), Err::NotIdempotent, "component closure needs an idempotent");
  const Group& G = e.G;
  Submodule H = Submodule::zero(G->field(), G->n());
  for (std::uint32_t i = 0; i < G->n(); ++i) {
    Vec b(G->n(), 0);
    b[i] = 1;
    Vec image_vec = apply_element(e, b);
    H = submodule_sum(H, cyclic_submodule(G, image_vec));
  }
  return H;
}

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::uint32_t k, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    require(acc <= cap / q, Err::ComponentTooLarge, "component vector scan exceeds the cap");
    acc *= q;
  }
  require(acc <= cap, Err::ComponentTooLarge, "component vector scan exceeds the cap");
  return acc;
}

struct ScanResult {
  std::uint32_t min_dim = 0;
  std::vector<SimpleEntry> minimal;  // cyclic submodules of the minimal dimension
};

// Walk every nonzero vector of H once, grouped into orbits, and keep the
// cyclic submodules of minimal dimension together with their canonical
// generators.  Vectors are indexed by their coordinates over the RREF basis.
ScanResult scan_component(const Group& G, const Submodule& H, std::uint64_t scan_cap) {
  const Field& F = G->field();
  const std::uint32_t k = H.dim();
  require(k > 0, Err::ZeroModule, "cannot scan the zero module");
  const std::uint64_t q = F->q();
  const std::uint64_t total = checked_pow(q, k, scan_cap);

  std::vector<bool> visited(total, false);
  visited[0] = true;

  auto encode = [&](const Vec& coords) {
    std::uint64_t code = 0;
    for (std::uint32_t i = k; i-- > 0;) code = code * q + coords[i];
    return code;
  };

  std::uint32_t min_dim = 0;
  std::map<std::vector<fel>, SimpleEntry> cands;

  Vec coords(k, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    if (visited[code]) continue;
    std::uint64_t rest = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      coords[i] = static_cast<fel>(rest % q);
      rest /= q;
    }
    Vec v(G->n(), 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (coords[i] == 0) continue;
      for (std::uint32_t j = 0; j < G->n(); ++j)
        v[j] = F->add(v[j], F->mul(coords[i], H.basis().at(i, j)));
    }

    std::vector<Vec> orb = orbit(G, v);
    for (const Vec& w : orb) {
      auto c = H.coordinates(w);
      require(c.has_value(), Err::Internal, "orbit leaves the component");
      visited[encode(*c)] = true;
    }

    Submodule S = Submodule::span(from_rows(F, orb, G->n()));
    const std::uint32_t d = S.dim();
    if (min_dim != 0 && d > min_dim) continue;
    if (min_dim == 0 || d < min_dim) {
      min_dim = d;
      // Larger-dimensional candidates can no longer be minimal.
      for (auto it = cands.begin(); it != cands.end();)
        it = (it->second.mod.dim() > d) ? cands.erase(it) : std::next(it);
    }
    Vec gen = *std::min_element(orb.begin(), orb.end());
    auto [it, fresh] = cands.try_emplace(S.key(), SimpleEntry{gen, S, orb.size()});
    if (!fresh) {
      SimpleEntry& cur = it->second;
      if (orb.size() < cur.orbit_size || (orb.size() == cur.orbit_size && gen < cur.generator)) {
        cur.generator = gen;
        cur.orbit_size = orb.size();
      }
    }
  }

  ScanResult res;
  res.min_dim = min_dim;
  for (auto& [key, entry] : cands) res.minimal.push_back(std::move(entry));
  std::sort(res.minimal.begin(), res.minimal.end(),
            [](const SimpleEntry& a, const SimpleEntry& b) { return a.generator < b.generator; });
  return res;
}

}  // namespace

std::uint32_t simple_dimension(const Group& G, const Submodule& H, std::uint64_t scan_cap) {
  return scan_component(G, H, scan_cap).min_dim;
}

std::vector<SimpleEntry> enumerate_simples(const Group& G, const Submodule& H, std::uint32_t d,
                                           std::uint64_t scan_cap) {
  ScanResult res = scan_component(G, H, scan_cap);
  require(res.min_dim == d, Err::InconsistentInput,
          "requested simple dimension differs from the component's actual one");
  return std::move(res.minimal);
}

namespace {

ComponentData analyze_one(const Group& G, const AlgebraElement& e, std::uint64_t scan_cap) {
  ComponentData cd;
  cd.idem = e;
  cd.component = homogeneous_component_central(e);
  ScanResult res = scan_component(G, cd.component, scan_cap);
  cd.simple_dim = res.min_dim;
  cd.simples = std::move(res.minimal);
  require(cd.component.dim() % cd.simple_dim == 0, Err::NotDivisible,
          "component dimension is not a multiple of the simple dimension");
  cd.mult_in_M = cd.component.dim() / cd.simple_dim;
  std::uint32_t ideal_dim = rank(regular_rep(e));
  require(ideal_dim % cd.simple_dim == 0, Err::NotDivisible,
          "ideal dimension is not a multiple of the simple dimension");
  cd.mult_in_A = ideal_dim / cd.simple_dim;
  return cd;
}

}  // namespace

std::vector<ComponentData> analyze_components(const Group& G,
                                              const std::vector<AlgebraElement>& idems,
                                              std::uint64_t scan_cap, bool parallel) {
  std::vector<const AlgebraElement*> active;
  for (const auto& e : idems) {
    require(is_idempotent(e), Err::NotIdempotent, "component analysis needs idempotents");
    if (!is_zero(action_matrix(e))) active.push_back(&e);
  }
  std::vector<ComponentData> out;
  if (parallel && active.size() > 1) {
    std::vector<std::future<ComponentData>> jobs;
    for (const AlgebraElement* e : active)
      jobs.push_back(std::async(std::launch::async,
                                [&G, e, scan_cap] { return analyze_one(G, *e, scan_cap); }));
    for (auto& j : jobs) out.push_back(j.get());
  } else {
    for (const AlgebraElement* e : active) out.push_back(analyze_one(G, *e, scan_cap));
  }
  return out;
}

}  // namespace ginv
