#include "ginv/enumerate.hpp"

#include <algorithm>

#include "ginv/errors.hpp"

namespace ginv {

bigint for_each_invariant_code(const std::vector<ComponentData>& comps,
                               const std::vector<SumOutput>& sums,
                               const EnumerateOptions& opts,
                               const std::function<void(const CodeRecord&)>& fn) {
  require(comps.size() == sums.size(), Err::DimMismatch,
          "one sum table per component is required");
  const std::size_t c = comps.size();
  if (c == 0) return 0;
  const Field& F = comps[0].component.basis().f;
  const std::uint32_t ambient = comps[0].component.ambient();

  // Selections per component, sorted by index set (empty set first).
  std::vector<std::vector<const SumEntry*>> choice(c);
  for (std::size_t j = 0; j < c; ++j) {
    for (const SumEntry& e : sums[j].sums) choice[j].push_back(&e);
    std::sort(choice[j].begin(), choice[j].end(),
              [](const SumEntry* a, const SumEntry* b) { return a->idx < b->idx; });
  }

  std::vector<std::size_t> pos(c, 0);
  bigint emitted = 0;
  while (true) {
    CodeRecord rec;
    rec.code = Submodule::zero(F, ambient);
    std::uint32_t expected_dim = 0;
    for (std::size_t j = 0; j < c; ++j) {
      const SumEntry& e = *choice[j][pos[j]];
      rec.decomposition.push_back(e.idx);
      for (std::uint32_t i : e.idx) rec.generators.push_back(comps[j].simples[i].generator);
      if (e.mod.dim() > 0) rec.code = submodule_sum(rec.code, e.mod);
      expected_dim += e.mod.dim();
    }
    require(rec.code.dim() == expected_dim, Err::Internal,
            "component contributions did not sum directly");
    rec.dim = rec.code.dim();
    if (opts.compute_weights && rec.dim <= opts.weight_max_dim)
      rec.min_weight = weight_stats(rec.code, opts.weight_max_dim).min_weight;
    fn(rec);
    ++emitted;

    // Odometer, last component fastest.
    std::size_t j = c;
    while (j-- > 0) {
      if (++pos[j] < choice[j].size()) break;
      pos[j] = 0;
      if (j == 0) return emitted;
    }
  }
}

WeightStats weight_stats(const Submodule& code, std::uint32_t max_dim) {
  WeightStats st;
  const std::uint32_t k = code.dim();
  if (k == 0) return st;
  const Field& F = code.basis().f;
  const std::uint32_t n = code.ambient();
  require(k <= max_dim, Err::TooLarge, "weight scan dimension exceeds the limit");
  const std::uint64_t q = F->q();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    require(total <= kWeightScanCap / q, Err::TooLarge, "weight scan exceeds the word cap");
    total *= q;
  }

  st.distribution.assign(n + 1, 0);
  Vec digits(k, 0);
  Vec word(n, 0);
  st.distribution[0] = 1;  // the zero word
  for (std::uint64_t step = 1; step < total; ++step) {
    // Base-q odometer; update the running word by each digit change.
    for (std::uint32_t i = 0; i < k; ++i) {
      fel old = digits[i];
      fel fresh = (old + 1 == q) ? 0 : old + 1;
      digits[i] = fresh;
      fel delta = F->sub(fresh, old);
      for (std::uint32_t j = 0; j < n; ++j)
        word[j] = F->add(word[j], F->mul(delta, code.basis().at(i, j)));
      if (fresh != 0) break;
    }
    std::uint64_t w = 0;
    for (fel x : word) w += (x != 0);
    ++st.distribution[w];
    if (!st.min_weight || w < *st.min_weight) st.min_weight = w;
  }
  return st;
}

std::optional<Vec> one_generator_vector(const Group& G, const CodeRecord& rec,
                                        const std::vector<ComponentData>& comps) {
  if (rec.dim == 0) return std::nullopt;
  const Field& F = G->field();
  Vec gen(G->n(), 0);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& idx = rec.decomposition[j];
    if (idx.empty()) continue;
    // With one summand per component the central idempotents project the sum
    // back onto each summand's generator, so the sum generates everything.
    // Two isomorphic summands cannot be separated that way; decline those.
    if (idx.size() > 1) return std::nullopt;
    const Vec& m = comps[j].simples[idx[0]].generator;
    for (std::uint32_t i = 0; i < gen.size(); ++i) gen[i] = F->add(gen[i], m[i]);
  }
  require(cyclic_submodule(G, gen) == rec.code, Err::Internal,
          "single generator failed to span the code");
  return gen;
}

std::vector<AlgebraElement> idempotent_module_basis(const AlgebraElement& e) {
  const Group& G = e.G;
  std::vector<AlgebraElement> basis;
  std::vector<Vec> rows;
  Submodule span = Submodule::zero(G->field(), G->order());
  for (std::uint32_t g = 0; g < G->order(); ++g) {
    AlgebraElement cand = alg_mul(alg_term(G, g, 1), e);
    if (span.contains(cand.c)) continue;
    rows.push_back(cand.c);
    span = Submodule::span(from_rows(G->field(), rows, G->order()));
    basis.push_back(std::move(cand));
  }
  return basis;
}

std::vector<Vec> basis_via_idempotent(const Vec& x, const AlgebraElement& e,
                                      const std::vector<AlgebraElement>& ideal_basis) {
  const Group& G = e.G;
  Vec xx = x;
  Vec first = apply_element(e, xx);
  if (std::all_of(first.begin(), first.end(), [](fel v) { return v == 0; })) {
    bool found = false;
    for (std::uint32_t g = 0; g < G->order() && !found; ++g) {
      Vec cand = mat_vec(G->element(g), x);
      Vec img = apply_element(e, cand);
      if (std::any_of(img.begin(), img.end(), [](fel v) { return v != 0; })) {
        xx = std::move(cand);
        found = true;
      }
    }
    require(found, Err::NoTranslate, "no group translate meets the idempotent");
  }
  std::vector<Vec> rows;
  for (const AlgebraElement& b : ideal_basis) rows.push_back(apply_element(b, xx));
  require(rank(from_rows(G->field(), rows, G->n())) == static_cast<std::uint32_t>(rows.size()),
          Err::Internal, "transported ideal basis is not independent");
  return rows;
}

std::vector<Vec> code_basis(const Group& G, const CodeRecord& rec,
                            const std::vector<ComponentData>& comps,
                            const std::vector<AlgebraElement>& block_idems) {
  require(block_idems.size() == comps.size(), Err::Input,
          "one block idempotent per component is required");
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& idx = rec.decomposition[j];
    if (idx.empty()) continue;
    std::vector<AlgebraElement> ideal = idempotent_module_basis(block_idems[j]);
    require(ideal.size() == comps[j].simple_dim, Err::Input,
            "block idempotent ideal dimension differs from the simple dimension");
    for (std::uint32_t i : idx) {
      std::vector<Vec> part =
          basis_via_idempotent(comps[j].simples[i].generator, block_idems[j], ideal);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  require(static_cast<std::uint32_t>(rows.size()) == rec.dim, Err::Internal,
          "structured basis has the wrong size");
  require(Submodule::span(from_rows(G->field(), rows, G->n())) == rec.code, Err::Internal,
          "structured basis spans the wrong code");
  return rows;
}

std::vector<AlgebraElement> pick_block_idempotents(const Group& G,
                                                   const std::vector<ComponentData>& comps,
                                                   const std::vector<AlgebraElement>& user_idems) {
  std::vector<AlgebraElement> out;
  for (const ComponentData& cd : comps) {
    if (cd.mult_in_A == 1) {
      out.push_back(cd.idem);
      continue;
    }
    bool found = false;
    for (const AlgebraElement& e : user_idems) {
      // Inside the component's block iff the central idempotent absorbs it.
      if (!(alg_mul(e, cd.idem) == e)) continue;
      if (rank(regular_rep(e)) != cd.simple_dim) continue;
      require(is_idempotent(e), Err::NotIdempotent, "supplied block element is not idempotent");
      out.push_back(e);
      found = true;
      break;
    }
    require(found, Err::Input,
            "component needs a user idempotent with a one-simple ideal for basis extraction");
  }
  return out;
}

}  // namespace ginv
