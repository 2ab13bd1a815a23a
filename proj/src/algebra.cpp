#include "ginv/algebra.hpp"

#include <algorithm>
#include <utility>

#include "ginv/errors.hpp"
#include "ginv/poly.hpp"

namespace ginv {

bool AlgebraElement::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](fel x) { return x == 0; });
}

AlgebraElement alg_zero(const Group& G) {
  return AlgebraElement{G, std::vector<fel>(G->order(), 0)};
}

AlgebraElement alg_one(const Group& G) { return alg_term(G, 0, 1); }

AlgebraElement alg_term(const Group& G, std::uint32_t g_idx, fel coeff) {
  AlgebraElement r = alg_zero(G);
  r.c[g_idx] = coeff;
  return r;
}

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
  const Field& F = a.G->field();
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F->add(r.c[i], b.c[i]);
  return r;
}

AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b) {
  const Field& F = a.G->field();
  AlgebraElement r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F->sub(r.c[i], b.c[i]);
  return r;
}

AlgebraElement alg_scale(const AlgebraElement& a, fel s) {
  const Field& F = a.G->field();
  AlgebraElement r = a;
  for (fel& x : r.c) x = F->mul(x, s);
  return r;
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
  const Field& F = a.G->field();
  AlgebraElement r = alg_zero(a.G);
  for (std::uint32_t i = 0; i < a.G->order(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::uint32_t j = 0; j < a.G->order(); ++j) {
      if (b.c[j] == 0) continue;
      std::uint32_t k = a.G->mul(i, j);
      r.c[k] = F->add(r.c[k], F->mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

bool is_idempotent(const AlgebraElement& e) { return alg_mul(e, e) == e; }

bool is_central(const AlgebraElement& e) {
  for (const auto& cls : e.G->conjugacy_classes()) {
    fel v = e.c[cls[0]];
    for (std::uint32_t g : cls)
      if (e.c[g] != v) return false;
  }
  return true;
}

Vec apply_element(const AlgebraElement& u, const Vec& v) {
  const Field& F = u.G->field();
  Vec r(u.G->n(), 0);
  for (std::uint32_t g = 0; g < u.G->order(); ++g) {
    if (u.c[g] == 0) continue;
    Vec w = mat_vec(u.G->element(g), v);
    for (std::uint32_t i = 0; i < r.size(); ++i) r[i] = F->add(r[i], F->mul(u.c[g], w[i]));
  }
  return r;
}

Matrix action_matrix(const AlgebraElement& u) {
  const Field& F = u.G->field();
  Matrix r(F, u.G->n(), u.G->n());
  for (std::uint32_t g = 0; g < u.G->order(); ++g) {
    if (u.c[g] == 0) continue;
    const Matrix& M = u.G->element(g);
    for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = F->add(r.a[k], F->mul(u.c[g], M.a[k]));
  }
  return r;
}

Matrix regular_rep(const AlgebraElement& u) {
  const Field& F = u.G->field();
  const std::uint32_t ord = u.G->order();
  Matrix r(F, ord, ord);
  for (std::uint32_t i = 0; i < ord; ++i) {
    if (u.c[i] == 0) continue;
    for (std::uint32_t j = 0; j < ord; ++j) {
      std::uint32_t k = u.G->mul(i, j);
      r.at(k, j) = F->add(r.at(k, j), u.c[i]);
    }
  }
  return r;
}

std::string alg_to_string(const AlgebraElement& u) {
  return vec_to_string(u.G->field(), u.c);
}

BasicSetReport verify_basic_set(const std::vector<AlgebraElement>& es) {
  BasicSetReport rep;
  if (es.empty()) return rep;
  const Group& G = es[0].G;
  const std::size_t r = es.size();
  rep.idempotent.resize(r);
  rep.central.resize(r);
  rep.nonzero.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    rep.idempotent[i] = is_idempotent(es[i]);
    rep.central[i] = is_central(es[i]);
    rep.nonzero[i] = !es[i].is_zero();
  }
  rep.pairwise_orthogonal = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && !alg_mul(es[i], es[j]).is_zero()) rep.pairwise_orthogonal = false;
  AlgebraElement sum = alg_zero(G);
  for (const auto& e : es) sum = alg_add(sum, e);
  rep.complete = (sum == alg_one(G));
  rep.valid = rep.pairwise_orthogonal && rep.complete;
  for (std::size_t i = 0; i < r; ++i)
    rep.valid = rep.valid && rep.idempotent[i] && rep.nonzero[i];
  // Left ideals Ae and Af are isomorphic iff eAf != 0, i.e. some group
  // element g has e g f != 0.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      bool iso = false;
      for (std::uint32_t g = 0; g < G->order() && !iso; ++g) {
        AlgebraElement m = alg_mul(es[i], alg_mul(alg_term(G, g, 1), es[j]));
        iso = !m.is_zero();
      }
      if (iso) rep.isomorphic_pairs.emplace_back(static_cast<std::uint32_t>(i),
                                                 static_cast<std::uint32_t>(j));
    }
  return rep;
}

namespace {

struct CenterBlock {
  AlgebraElement unit;  // idempotent acting as identity on this block
  Submodule zspan;      // the block's center, as a subspace of F^{|G|}
};

AlgebraElement from_coeffs(const Group& G, Vec c) {
  return AlgebraElement{G, std::move(c)};
}

// Evaluate h at z inside the algebra, with z^0 := unit (the block identity).
AlgebraElement eval_in_algebra(const Poly& h, const AlgebraElement& z,
                               const AlgebraElement& unit) {
  AlgebraElement acc = alg_zero(z.G);
  AlgebraElement zpow = unit;
  for (std::size_t j = 0; j < h.c.size(); ++j) {
    if (h.c[j] != 0) acc = alg_add(acc, alg_scale(zpow, h.c[j]));
    if (j + 1 < h.c.size()) zpow = alg_mul(zpow, z);
  }
  return acc;
}

}  // namespace

std::vector<AlgebraElement> central_primitive_idempotents(const Group& G,
                                                          std::mt19937_64& rng) {
  require(G->semisimple(), Err::NotSemisimple,
          "group order is divisible by the field characteristic");
  const Field& F = G->field();

  // The class sums span the center; with classes sorted by smallest member
  // their coefficient vectors have disjoint supports and ascending leading
  // positions, so they already form an echelon basis.
  std::vector<Vec> class_rows;
  for (const auto& cls : G->conjugacy_classes()) {
    Vec row(G->order(), 0);
    for (std::uint32_t g : cls) row[g] = 1;
    class_rows.push_back(std::move(row));
  }
  Submodule center = Submodule::span(from_rows(F, class_rows, G->order()));

  std::vector<CenterBlock> pending;
  pending.push_back(CenterBlock{alg_one(G), center});
  std::vector<AlgebraElement> done;
  std::uniform_int_distribution<std::uint64_t> coeff_dist(0, F->q() - 1);

  while (!pending.empty()) {
    CenterBlock blk = std::move(pending.back());
    pending.pop_back();
    const std::uint32_t k = blk.zspan.dim();
    require(k >= 1, Err::Internal, "empty center block");
    if (k == 1) {
      done.push_back(blk.unit);
      continue;
    }

    bool resolved = false;
    for (std::uint32_t attempt = 0; attempt < 1000 && !resolved; ++attempt) {
      // Random central element of the block.
      AlgebraElement z = alg_zero(G);
      for (std::uint32_t i = 0; i < k; ++i) {
        fel s = static_cast<fel>(coeff_dist(rng));
        if (s != 0)
          z = alg_add(z, alg_scale(from_coeffs(G, blk.zspan.basis().row(i)), s));
      }

      // Multiplication by z as an operator on the block center.
      Matrix T(F, k, k);
      bool closed = true;
      for (std::uint32_t i = 0; i < k && closed; ++i) {
        AlgebraElement prod = alg_mul(z, from_coeffs(G, blk.zspan.basis().row(i)));
        auto coords = blk.zspan.coordinates(prod.c);
        if (!coords) {
          closed = false;
          break;
        }
        for (std::uint32_t r = 0; r < k; ++r) T.at(r, i) = (*coords)[r];
      }
      require(closed, Err::Internal, "center block is not closed under multiplication");

      Poly mp = min_poly(T);
      auto factors = factor_poly(F, mp, rng);
      bool squarefree = std::all_of(factors.begin(), factors.end(),
                                    [](const auto& f) { return f.second == 1; });
      if (!squarefree) continue;  // cannot happen for a semisimple center; retry anyway

      if (factors.size() == 1 && mp.deg() == static_cast<int>(k)) {
        // Irreducible minimal polynomial of full degree: the block center is
        // a field, so its unit is a central primitive idempotent.
        done.push_back(blk.unit);
        resolved = true;
        break;
      }
      if (factors.size() < 2) continue;  // z generates a proper subfield; retry

      // Chinese-remainder split: h_i = 1 mod f_i, 0 mod the others.
      std::vector<AlgebraElement> units;
      for (const auto& [f_i, mult] : factors) {
        auto [g_i, rem] = p_divmod(F, mp, f_i);
        require(rem.is_zero(), Err::Internal, "factor does not divide the minimal polynomial");
        Poly h = p_mod(F, p_mul(F, g_i, p_invmod(F, g_i, f_i)), mp);
        units.push_back(eval_in_algebra(h, z, blk.unit));
      }
      AlgebraElement total = alg_zero(G);
      for (const auto& u : units) total = alg_add(total, u);
      require(total == blk.unit, Err::Internal, "central splitting lost the block unit");
      for (std::size_t i = 0; i < units.size(); ++i) {
        require(is_idempotent(units[i]), Err::Internal, "central splitting is not idempotent");
        for (std::size_t j = i + 1; j < units.size(); ++j)
          require(alg_mul(units[i], units[j]).is_zero(), Err::Internal,
                  "central splitting is not orthogonal");
      }
      for (const auto& u : units) {
        std::vector<Vec> rows;
        for (std::uint32_t i = 0; i < k; ++i)
          rows.push_back(alg_mul(u, from_coeffs(G, blk.zspan.basis().row(i))).c);
        CenterBlock child{u, Submodule::span(from_rows(F, rows, G->order()))};
        require(child.zspan.dim() >= 1, Err::Internal, "central splitting produced a zero block");
        pending.push_back(std::move(child));
      }
      resolved = true;
    }
    require(resolved, Err::Internal, "central idempotent splitting failed to make progress");
  }

  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace ginv
