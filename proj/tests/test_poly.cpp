#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ginv/errors.hpp"
#include "ginv/poly.hpp"

using namespace ginv;

TEST_CASE("divmod and gcd") {
  Field f = make_prime_field(5);
  Poly a = p_from({2, 0, 0, 0, 4});  // 4x^4 + 2, coprime to x + 2
  Poly b = p_from({2, 1});           // x + 2
  auto [q, r] = p_divmod(f, a, b);
  CHECK(p_add(f, p_mul(f, q, b), r) == a);
  CHECK(r.deg() < b.deg());

  Poly g = p_gcd(f, p_mul(f, a, b), p_mul(f, b, b));
  CHECK(g == p_monic(f, b));
}

TEST_CASE("modular inverse") {
  Field f = make_prime_field(7);
  Poly m = p_from({1, 0, 1});  // x^2 + 1, irreducible over GF(7)? 7 = 3 mod 4, yes
  Poly a = p_from({3, 1});
  Poly inv = p_invmod(f, a, m);
  CHECK(p_mod(f, p_mul(f, a, inv), m) == p_from({1}));
  try {
    p_invmod(f, m, m);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::DivZero);
  }
}

TEST_CASE("factorization over small prime fields") {
  std::mt19937_64 rng(7);
  Field f5 = make_prime_field(5);
  // x^2 + 1 = (x+2)(x+3) over GF(5)
  auto fs = factor_poly(f5, p_from({1, 0, 1}), rng);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == p_from({2, 1}));
  CHECK(fs[1].first == p_from({3, 1}));
  CHECK(fs[0].second == 1);
  CHECK(fs[1].second == 1);

  Field f2 = make_prime_field(2);
  // (x+1)^2 * (x^2+x+1) exercises the squarefree pass in characteristic 2
  Poly g = p_mul(f2, p_mul(f2, p_from({1, 1}), p_from({1, 1})), p_from({1, 1, 1}));
  auto gs = factor_poly(f2, g, rng);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].first == p_from({1, 1}));
  CHECK(gs[0].second == 2);
  CHECK(gs[1].first == p_from({1, 1, 1}));
  CHECK(gs[1].second == 1);
}

TEST_CASE("factorization round trips on random polynomials") {
  std::mt19937_64 rng(13);
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    Field f = make_prime_field(q);
    for (int trial = 0; trial < 40; ++trial) {
      Poly a;
      std::uint32_t deg = 1 + rng() % 7;
      a.c.resize(deg + 1);
      for (auto& c : a.c) c = static_cast<fel>(rng() % q);
      a.c[deg] = 1 + static_cast<fel>(rng() % (q - 1));
      a = p_trim(std::move(a));
      auto fs = factor_poly(f, a, rng);
      Poly prod = p_from({a.c.back()});
      for (const auto& [fac, mult] : fs) {
        CHECK(is_irreducible(f, fac));
        for (std::uint32_t i = 0; i < mult; ++i) prod = p_mul(f, prod, fac);
      }
      CHECK(prod == a);
    }
  }
}

TEST_CASE("factorization over an extension field") {
  std::mt19937_64 rng(99);
  Field f4 = make_extension_field(2, 2, {1, 1, 1});
  // x^2 + x + 1 splits over GF(4) into (x + alpha)(x + alpha^2)
  auto fs = factor_poly(f4, p_from({1, 1, 1}), rng);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first.deg() == 1);
  CHECK(fs[1].first.deg() == 1);

  // Frobenius p-th root path: (x + alpha)^2 = x^2 + alpha^2
  Poly sq = p_mul(f4, p_from({2, 1}), p_from({2, 1}));
  auto gs = factor_poly(f4, sq, rng);
  REQUIRE(gs.size() == 1);
  CHECK(gs[0].first == p_from({2, 1}));
  CHECK(gs[0].second == 2);
}

TEST_CASE("irreducibility") {
  Field f2 = make_prime_field(2);
  CHECK(is_irreducible(f2, p_from({1, 1, 1})));        // x^2+x+1
  CHECK(is_irreducible(f2, p_from({1, 1, 0, 1})));     // x^3+x+1
  CHECK_FALSE(is_irreducible(f2, p_from({1, 0, 1})));  // (x+1)^2
  Field f3 = make_prime_field(3);
  CHECK(is_irreducible(f3, p_from({1, 0, 1})));  // x^2+1 over GF(3)
}

TEST_CASE("minimal polynomials of matrices") {
  Field f = make_prime_field(3);
  // identity: min poly x - 1
  CHECK(min_poly(identity_matrix(f, 4)) == p_from({2, 1}));
  // shift by two places on F_3^4: order 2, min poly x^2 - 1
  Matrix S = fixtures::matrix_of(f, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(min_poly(S) == p_from({2, 0, 1}));
  // nilpotent Jordan block: x^3
  Matrix N = fixtures::matrix_of(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(min_poly(N) == p_from({0, 0, 0, 1}));
  // companion matrix of x^2 + 1 over GF(3)
  Matrix C = fixtures::matrix_of(f, {{0, 2}, {1, 0}});
  CHECK(min_poly(C) == p_from({1, 0, 1}));
}
