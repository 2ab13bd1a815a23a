#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ginv/group.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

// An element of the group algebra F[G]: one coefficient per group element,
// indexed in the group's canonical element order.
struct AlgebraElement {
  Group G;
  std::vector<fel> c;

  bool is_zero() const;
  bool operator==(const AlgebraElement& o) const { return c == o.c; }
  bool operator<(const AlgebraElement& o) const { return c < o.c; }
};

AlgebraElement alg_zero(const Group& G);
AlgebraElement alg_one(const Group& G);
// coeff * g_idx as an algebra element.
AlgebraElement alg_term(const Group& G, std::uint32_t g_idx, fel coeff);
AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_scale(const AlgebraElement& a, fel s);
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);

bool is_idempotent(const AlgebraElement& e);
// Central iff the coefficient function is constant on conjugacy classes.
bool is_central(const AlgebraElement& e);

// u acting on a vector of F^n: sum of c_g * (M_g v).
Vec apply_element(const AlgebraElement& u, const Vec& v);
// Matrix of that action on F^n.
Matrix action_matrix(const AlgebraElement& u);
// Matrix of left multiplication by u on F[G] itself (|G| x |G|), columns
// indexed by the group element order.
Matrix regular_rep(const AlgebraElement& u);

std::string alg_to_string(const AlgebraElement& u);

// Diagnostic report for a user-supplied family of idempotents.
struct BasicSetReport {
  std::vector<bool> idempotent;          // e*e == e, per element
  std::vector<bool> central;             // per element
  std::vector<bool> nonzero;             // per element
  bool pairwise_orthogonal = false;      // e_i e_j == 0 == e_j e_i for i != j
  bool complete = false;                 // sum == 1
  bool valid = false;                    // all idempotent + nonzero + orthogonal + complete
  // Pairs (i, j), i < j, whose left ideals are isomorphic as modules
  // (witnessed by some g with e_i g e_j != 0).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> isomorphic_pairs;
};
BasicSetReport verify_basic_set(const std::vector<AlgebraElement>& es);

// The complete set of central primitive idempotents of F[G], sorted by
// coefficient tuple.  Requires gcd(|G|, char F) = 1 (E_NOT_SEMISIMPLE).
// Randomized splitting, deterministic output.
std::vector<AlgebraElement> central_primitive_idempotents(const Group& G, std::mt19937_64& rng);

}  // namespace ginv
