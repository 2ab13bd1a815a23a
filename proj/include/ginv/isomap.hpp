#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ginv/group.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

inline constexpr std::uint64_t kDefaultIsoBudget = std::uint64_t{1} << 22;

// The reference action of G on F^n for n = copies * |G|: basis vectors are
// indexed by (copy, group element) as copy * |G| + element, and each group
// generator permutes each copy by left multiplication.
struct RegularBasisRep {
  Group G;
  std::uint32_t copies = 0;
  std::vector<Matrix> gen_action;  // one permutation matrix per input generator
};

// E_BAD_T when |G| does not divide n.
RegularBasisRep build_regular_rep(const Group& G);

// Does the monomial matrix A intertwine the given action with the regular
// one, A * M_s = R_s * A for every input generator s?  E_NOT_MONOMIAL when A
// is not monomial, E_DIM_MISMATCH on shape mismatch.
bool check_weight_iso(const Matrix& A, const RegularBasisRep& rep);

// Search for such a monomial matrix.  Exhaustive constraint propagation over
// column assignments; deterministic.  Returns the matrix, or nullopt when
// provably none exists (some generator is not monomial, or the search space
// is exhausted).  E_BUDGET_EXCEEDED when the node budget runs out first.
std::optional<Matrix> search_weight_iso(const RegularBasisRep& rep,
                                        std::uint64_t budget = kDefaultIsoBudget);

}  // namespace ginv
