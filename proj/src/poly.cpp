#include "ginv/poly.hpp"

#include <algorithm>

namespace ginv {

Poly p_trim(Poly f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
  return f;
}

Poly p_from(std::initializer_list<fel> coeffs) { return p_trim(Poly{std::vector<fel>(coeffs)}); }

Poly p_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    fel x = i < a.c.size() ? a.c[i] : 0;
    fel y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F->add(x, y);
  }
  return p_trim(std::move(r));
}

Poly p_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    fel x = i < a.c.size() ? a.c[i] : 0;
    fel y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F->sub(x, y);
  }
  return p_trim(std::move(r));
}

Poly p_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j]) r.c[i + j] = F->add(r.c[i + j], F->mul(a.c[i], b.c[j]));
  }
  return r;
}

Poly p_scale(const Field& F, const Poly& a, fel s) {
  if (s == 0) return {};
  Poly r = a;
  for (fel& x : r.c) x = F->mul(x, s);
  return r;
}

std::pair<Poly, Poly> p_divmod(const Field& F, const Poly& a, const Poly& b) {
  require(!b.is_zero(), Err::DivZero, "polynomial division by zero");
  Poly rem = a, quot;
  const int db = b.deg();
  if (a.deg() >= db) quot.c.assign(a.deg() - db + 1, 0);
  fel lead_inv = F->inv(b.c.back());
  while (rem.deg() >= db) {
    int shift = rem.deg() - db;
    fel coef = F->mul(rem.c.back(), lead_inv);
    quot.c[shift] = coef;
    for (int i = 0; i <= db; ++i)
      rem.c[shift + i] = F->sub(rem.c[shift + i], F->mul(coef, b.c[i]));
    rem = p_trim(std::move(rem));
  }
  return {p_trim(std::move(quot)), std::move(rem)};
}

Poly p_mod(const Field& F, const Poly& a, const Poly& b) { return p_divmod(F, a, b).second; }

Poly p_monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return p_scale(F, a, F->inv(a.c.back()));
}

Poly p_gcd(const Field& F, Poly a, Poly b) {
  a = p_trim(std::move(a));
  b = p_trim(std::move(b));
  while (!b.is_zero()) {
    Poly r = p_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return p_monic(F, a);
}

Poly p_derivative(const Field& F, const Poly& a) {
  Poly r;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    // i as a field scalar: i mod p embeds as the constant digit of GF(q)
    fel scalar = static_cast<fel>(i % F->p());
    r.c[i - 1] = F->mul(a.c[i], scalar);
  }
  return p_trim(std::move(r));
}

fel p_eval(const Field& F, const Poly& a, fel x) {
  fel acc = 0;
  for (std::size_t i = a.c.size(); i-- > 0;) acc = F->add(F->mul(acc, x), a.c[i]);
  return acc;
}

Poly p_pow_mod(const Field& F, Poly base, bigint e, const Poly& mod) {
  base = p_mod(F, base, mod);
  Poly r = p_mod(F, p_from({1}), mod);
  while (e > 0) {
    if ((e & 1) != 0) r = p_mod(F, p_mul(F, r, base), mod);
    base = p_mod(F, p_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

Poly p_invmod(const Field& F, const Poly& a, const Poly& m) {
  // Extended Euclid on (m, a mod m), tracking only the coefficient of a.
  Poly r0 = p_trim(m), r1 = p_mod(F, a, m);
  Poly t0, t1 = p_from({1});
  while (!r1.is_zero()) {
    auto [q, r2] = p_divmod(F, r0, r1);
    Poly t2 = p_sub(F, t0, p_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  require(r0.deg() == 0, Err::DivZero, "polynomial is not invertible modulo m");
  return p_mod(F, p_scale(F, t0, F->inv(r0.c[0])), m);
}

namespace {

// f(x) = g(x)^p with g coefficients a_{ip}^{p^{m-1}} (Frobenius preimage).
Poly pth_root(const Field& F, const Poly& f) {
  const std::uint64_t p = F->p();
  Poly g;
  g.c.resize(f.c.size() / p + 1, 0);
  std::uint64_t frob_exp = 1;
  for (std::uint32_t i = 0; i + 1 < F->m(); ++i) frob_exp *= p;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    require(i % p == 0, Err::Internal, "polynomial is not a p-th power");
    g.c[i / p] = F->pow(f.c[i], frob_exp);
  }
  return p_trim(std::move(g));
}

void squarefree_parts(const Field& F, Poly f, std::uint32_t outer_mult,
                      std::vector<std::pair<Poly, std::uint32_t>>& out) {
  const std::uint64_t p = F->p();
  Poly fp = p_derivative(F, f);
  if (!fp.is_zero()) {
    Poly c = p_gcd(F, f, fp);
    Poly w = p_divmod(F, f, c).first;
    std::uint32_t i = 1;
    while (w.deg() > 0) {
      Poly y = p_gcd(F, w, c);
      Poly z = p_divmod(F, w, y).first;
      if (z.deg() > 0) out.emplace_back(p_monic(F, z), i * outer_mult);
      ++i;
      w = std::move(y);
      c = p_divmod(F, c, w).first;
    }
    if (c.deg() > 0) squarefree_parts(F, pth_root(F, c), outer_mult * static_cast<std::uint32_t>(p), out);
  } else {
    squarefree_parts(F, pth_root(F, f), outer_mult * static_cast<std::uint32_t>(p), out);
  }
}

// Split a product of distinct irreducibles of equal degree d.
void equal_degree_split(const Field& F, const Poly& f, std::uint32_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (f.deg() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint64_t q = F->q();
  std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
  for (;;) {
    Poly a;
    a.c.resize(f.c.size() - 1);
    for (fel& x : a.c) x = static_cast<fel>(dist(rng));
    a = p_trim(std::move(a));
    if (a.deg() < 1) continue;
    Poly t;
    if (F->p() != 2) {
      bigint e = (boost::multiprecision::pow(bigint(q), d) - 1) / 2;
      Poly b = p_pow_mod(F, a, e, f);
      t = p_gcd(F, p_sub(F, b, p_from({1})), f);
    } else {
      // trace map over GF(2): a + a^2 + a^4 + ... splits products over char 2
      std::uint64_t steps = static_cast<std::uint64_t>(d) * F->m();
      Poly acc = p_mod(F, a, f), sq = acc;
      for (std::uint64_t i = 1; i < steps; ++i) {
        sq = p_mod(F, p_mul(F, sq, sq), f);
        acc = p_add(F, acc, sq);
      }
      t = p_gcd(F, acc, f);
    }
    if (t.deg() > 0 && t.deg() < f.deg()) {
      equal_degree_split(F, p_monic(F, t), d, rng, out);
      equal_degree_split(F, p_monic(F, p_divmod(F, f, t).first), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, std::uint32_t>> factor_poly(const Field& F, const Poly& f,
                                                        std::mt19937_64& rng) {
  require(f.deg() >= 1, Err::Input, "factorization needs a nonconstant polynomial");
  std::vector<std::pair<Poly, std::uint32_t>> squarefree;
  squarefree_parts(F, p_monic(F, f), 1, squarefree);

  std::vector<std::pair<Poly, std::uint32_t>> out;
  for (auto& [g, mult] : squarefree) {
    // distinct-degree pass
    Poly rest = g;
    Poly x = p_from({0, 1});
    Poly h = p_mod(F, x, rest);
    std::uint32_t d = 0;
    std::vector<std::pair<Poly, std::uint32_t>> by_degree;
    while (rest.deg() > 0 && 2 * static_cast<int>(d + 1) <= rest.deg()) {
      ++d;
      h = p_pow_mod(F, h, bigint(F->q()), rest);
      Poly split = p_gcd(F, p_sub(F, h, x), rest);
      if (split.deg() > 0) {
        by_degree.emplace_back(split, d);
        rest = p_monic(F, p_divmod(F, rest, split).first);
        h = p_mod(F, h, rest);
      }
    }
    if (rest.deg() > 0) by_degree.emplace_back(rest, static_cast<std::uint32_t>(rest.deg()));
    for (auto& [prod, dd] : by_degree) {
      std::vector<Poly> irreducibles;
      equal_degree_split(F, p_monic(F, prod), dd, rng, irreducibles);
      for (Poly& irr : irreducibles) out.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // always-on sanity: factors are irreducible and multiply back to the input
  Poly check = p_from({1});
  for (auto& [g, mult] : out) {
    require(is_irreducible(F, g), Err::Internal, "factor failed irreducibility recheck");
    for (std::uint32_t i = 0; i < mult; ++i) check = p_mul(F, check, g);
  }
  require(check == p_monic(F, f), Err::Internal, "factor product mismatch");
  return out;
}

bool is_irreducible(const Field& F, const Poly& f) {
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  Poly x = p_from({0, 1});
  Poly h = p_mod(F, x, f);
  for (int i = 1; 2 * i <= f.deg(); ++i) {
    h = p_pow_mod(F, h, bigint(F->q()), f);
    if (p_gcd(F, p_sub(F, h, x), f).deg() > 0) return false;
  }
  return true;
}

Poly min_poly(const Matrix& T) {
  require(T.rows == T.cols, Err::DimMismatch, "minimal polynomial of a non-square matrix");
  const Field& F = T.f;
  const std::uint32_t k = T.rows;
  Poly mp = p_from({1});
  if (k == 0) return mp;
  for (std::uint32_t s = 0; s < k && mp.deg() < static_cast<int>(k); ++s) {
    // Krylov chain from e_s; rows kept in echelon form with their
    // witness polynomials (row = witness(T) e_s).
    std::vector<Vec> rows;
    std::vector<Poly> witness;
    Vec w(k, 0);
    w[s] = 1;
    Poly pw = p_from({1});
    for (;;) {
      // reduce w against stored rows, mirroring operations on pw
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint32_t piv = 0;
        while (rows[i][piv] == 0) ++piv;
        if (w[piv] != 0) {
          fel factor = F->mul(w[piv], F->inv(rows[i][piv]));
          for (std::uint32_t j = 0; j < k; ++j) w[j] = F->sub(w[j], F->mul(factor, rows[i][j]));
          pw = p_sub(F, pw, p_scale(F, witness[i], factor));
        }
      }
      if (std::all_of(w.begin(), w.end(), [](fel x) { return x == 0; })) {
        // pw(T) e_s = 0 and pw stays monic through the reduction
        Poly g = p_gcd(F, mp, pw);
        mp = p_mul(F, p_divmod(F, mp, g).first, pw);  // lcm
        break;
      }
      rows.push_back(w);
      witness.push_back(pw);
      Vec next(k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        fel acc = 0;
        for (std::uint32_t j = 0; j < k; ++j)
          if (T.at(i, j) && w[j]) acc = F->add(acc, F->mul(T.at(i, j), w[j]));
        next[i] = acc;
      }
      w = std::move(next);
      Poly shifted;
      shifted.c.assign(pw.c.size() + 1, 0);
      std::copy(pw.c.begin(), pw.c.end(), shifted.c.begin() + 1);
      pw = std::move(shifted);
    }
  }
  return p_monic(F, mp);
}

}  // namespace ginv
