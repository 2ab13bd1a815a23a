#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ginv/linalg.hpp"

namespace ginv {

using bigint = boost::multiprecision::cpp_int;

// Dense univariate polynomial, low degree first, no trailing zeros
// (zero polynomial = empty coefficient vector).
struct Poly {
  std::vector<fel> c;
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator<(const Poly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    return c < o.c;
  }
};

Poly p_trim(Poly f);
Poly p_from(std::initializer_list<fel> coeffs);
Poly p_add(const Field& F, const Poly& a, const Poly& b);
Poly p_sub(const Field& F, const Poly& a, const Poly& b);
Poly p_mul(const Field& F, const Poly& a, const Poly& b);
Poly p_scale(const Field& F, const Poly& a, fel s);
// quotient and remainder; divisor must be nonzero
std::pair<Poly, Poly> p_divmod(const Field& F, const Poly& a, const Poly& b);
Poly p_mod(const Field& F, const Poly& a, const Poly& b);
Poly p_monic(const Field& F, const Poly& a);
Poly p_gcd(const Field& F, Poly a, Poly b);  // monic gcd
Poly p_derivative(const Field& F, const Poly& a);
fel p_eval(const Field& F, const Poly& a, fel x);
Poly p_pow_mod(const Field& F, Poly base, bigint e, const Poly& mod);
// Inverse of a modulo m (deg m >= 1, gcd(a, m) = 1; E_DIV_ZERO otherwise).
Poly p_invmod(const Field& F, const Poly& a, const Poly& m);

// Distinct monic irreducible factors with multiplicities, sorted by
// (degree, coefficients).  Randomized (Cantor-Zassenhaus) but the output is
// canonical; the generator drives only the internal splitting choices.
std::vector<std::pair<Poly, std::uint32_t>> factor_poly(const Field& F, const Poly& f,
                                                        std::mt19937_64& rng);

bool is_irreducible(const Field& F, const Poly& f);

// Monic minimal polynomial of a square matrix, by Krylov chains with
// coefficient tracking, lcm over the canonical basis.
Poly min_poly(const Matrix& T);

}  // namespace ginv
