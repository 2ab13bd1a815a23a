#pragma once

#include <cstdint>
#include <vector>

#include "ginv/group.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 14;

// Brute-force ground truth: every invariant subspace of F^n, zero and full
// included, found by closing the set of cyclic submodules of all vectors
// under pairwise sums.  Sorted by (dimension, basis entries).  E_TOO_LARGE
// when q^n exceeds the cap.
std::vector<Submodule> oracle_all_submodules(const Group& G,
                                             std::uint64_t cap = kDefaultOracleCap);

// Independent invariance check: every group generator maps every basis row
// back into the subspace.
bool oracle_check_invariant(const Group& G, const Submodule& S);

}  // namespace ginv
