#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "ginv/linalg.hpp"
#include "ginv/poly.hpp"

namespace ginv {

// One distinct sum of simples: the (sorted) indices of its summands in the
// component's simple list, and the submodule itself.
struct SumEntry {
  std::vector<std::uint32_t> idx;
  Submodule mod;
};

struct SumOutput {
  // Every distinct submodule of the component, zero (empty index set) first,
  // then singletons, then sums in discovery order.
  std::vector<SumEntry> sums;
  // Index sets admitted as canonical representatives, in admission order.
  std::vector<std::vector<std::uint32_t>> admitted;
  // Index sets proven redundant (their sum equals an earlier one).
  std::set<std::vector<std::uint32_t>> excluded;
};

// b(k) = number of simple submodules of a direct sum of k copies of the
// component's simple module; used for the containment early exit.
using SimpleCountFn = std::function<bigint(std::uint32_t)>;

// Duplicate-free enumeration of all sums of the given simples: walks subsets
// in lexicographic order, skipping subsets already proven to repeat an
// earlier sum.  `mult` is the component's multiplicity (the largest number of
// independent summands).  All inputs must be distinct simples of one
// dimension whose total sum has dimension mult * d (E_INCONSISTENT_INPUT).
// `early_exit` stops each containment scan once the count of simples inside
// a direct sum is provably complete; disabling it changes nothing but time.
SumOutput sum_of_simples(const std::vector<Submodule>& simples, std::uint32_t mult,
                         const SimpleCountFn& simple_count, bool early_exit = true);

}  // namespace ginv
