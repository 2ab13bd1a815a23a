#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ginv/errors.hpp"

namespace ginv {

// A field element is a canonical integer encoding.  Prime field GF(p): the
// residue 0..p-1.  Extension field GF(p^m): sum c_i p^i of the coefficient
// vector (c_0 + c_1 a + ... + c_{m-1} a^{m-1}, low degree first).
using fel = std::uint32_t;

// Arithmetic context for GF(q), q = p^m.  Immutable after construction and
// shared (by pointer) by every matrix and vector built over it.
class Fq {
 public:
  // GF(p), p prime (checked by trial division).
  explicit Fq(std::uint64_t p);
  // GF(p^m) with a monic irreducible modulus of degree m over GF(p),
  // low degree first, modulus.size() == m+1, modulus[m] == 1.
  Fq(std::uint64_t p, std::uint32_t m, std::vector<fel> modulus);

  std::uint64_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t q() const { return q_; }
  bool prime_field() const { return m_ == 1; }
  const std::vector<fel>& modulus() const { return modulus_; }

  bool valid(fel a) const { return a < q_; }
  // Validates and canonicalizes an integer read from input.
  fel from_int(std::int64_t v, const std::string& where) const;

  fel add(fel a, fel b) const;
  fel sub(fel a, fel b) const;
  fel neg(fel a) const;
  fel mul(fel a, fel b) const;
  fel inv(fel a) const;  // E_DIV_ZERO on 0
  fel pow(fel a, std::uint64_t e) const;

  // Coefficients over the prime subfield, length m, low degree first.
  std::vector<fel> decode(fel a) const;
  fel encode(const std::vector<fel>& digits) const;

  // Rendering used by the CLI: prime fields as one decimal scalar, extension
  // fields as a bracketed coefficient tuple like (1,0,2).
  std::string to_string(fel a) const;

 private:
  std::uint64_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<fel> modulus_;  // empty for prime fields
};

using Field = std::shared_ptr<const Fq>;

Field make_prime_field(std::uint64_t p);
Field make_extension_field(std::uint64_t p, std::uint32_t m, std::vector<fel> modulus);

}  // namespace ginv
