#pragma once

#include <cstdint>
#include <vector>

#include "ginv/modaction.hpp"
#include "ginv/poly.hpp"

namespace ginv {

// Submodule counts for one homogeneous component.  b[t] is the number of
// simple submodules of a direct sum of t copies of the component's simple
// module; b[0] = 0, b[1] = 1.
struct GaussianTable {
  std::vector<bigint> b;
  bool closed_form = false;
};

// Number of simple submodules of t copies of a simple of dimension d via the
// geometric-series formula (q^{t*d}-1)/(q^d-1).  Valid only when the simple
// occurs exactly once in F[G]; pass that fact explicitly (E_MULT_NOT_ONE).
bigint simple_count_closed(const Field& F, std::uint32_t t, std::uint32_t d,
                           bool mult_in_algebra_is_one);

// Number of simple submodules of the span of the first t independent simples
// of the component, counted directly from the enumerated simple list.
bigint simple_count_enumerated(const ComponentData& cd, std::uint32_t t);

// b[0..mult_in_M], by the closed form when the simple occurs once in F[G],
// by direct counting otherwise.
GaussianTable build_gaussian_table(const Field& F, const ComponentData& cd);

// Number of submodules isomorphic to k copies of the simple inside n copies,
// from the b-table by the telescoping quotient
//   prod_{j<k} (b[n]-b[j]) / prod_{j<k} (b[k]-b[j]).
// E_K_TOO_LARGE when n exceeds the table, E_INEXACT_DIVISION if the quotient
// fails to come out exact.
bigint submodule_count(const GaussianTable& t, std::uint32_t n, std::uint32_t k);

// Total number of invariant codes (submodules of F^n), zero and full included.
bigint count_all_invariant(const Field& F, const std::vector<ComponentData>& comps);

// Number of nonzero invariant codes generated by a single vector.
bigint count_one_generator(const Field& F, const std::vector<ComponentData>& comps);

}  // namespace ginv
