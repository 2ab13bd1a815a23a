#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ginv/algebra.hpp"
#include "ginv/modaction.hpp"
#include "ginv/poly.hpp"
#include "ginv/sumalg.hpp"

namespace ginv {

inline constexpr std::uint32_t kDefaultWeightMaxDim = 20;
inline constexpr std::uint64_t kWeightScanCap = std::uint64_t{1} << 26;

// One invariant code, described by its choice of summands per component.
struct CodeRecord {
  Submodule code;
  // Per component (in component order): indices of the chosen simples, empty
  // when the component contributes nothing.
  std::vector<std::vector<std::uint32_t>> decomposition;
  // Canonical generators of all chosen simples, component order then index order.
  std::vector<Vec> generators;
  std::uint32_t dim = 0;
  std::optional<std::uint64_t> min_weight;  // filled only when weights are requested
};

struct EnumerateOptions {
  bool compute_weights = false;
  std::uint32_t weight_max_dim = kDefaultWeightMaxDim;  // codes above stay unweighted
};

// Visit every invariant code exactly once, in lexicographic order of the
// per-component index-set tuples (zero choice first in each component).
// Returns the number of records emitted.
bigint for_each_invariant_code(const std::vector<ComponentData>& comps,
                               const std::vector<SumOutput>& sums,
                               const EnumerateOptions& opts,
                               const std::function<void(const CodeRecord&)>& fn);

// All weights of a code by full scan: distribution[w] = number of words of
// weight w (empty for the zero code).  E_TOO_LARGE when dim exceeds max_dim
// or the scan exceeds the built-in word cap.
struct WeightStats {
  std::optional<std::uint64_t> min_weight;
  std::vector<std::uint64_t> distribution;
};
WeightStats weight_stats(const Submodule& code, std::uint32_t max_dim = kDefaultWeightMaxDim);

// A vector generating the whole code, when the decomposition supports one:
// every chosen simple must lie in a component whose simple occurs exactly
// once in F[G], at most one summand per component.  Absent otherwise.
std::optional<Vec> one_generator_vector(const Group& G, const CodeRecord& rec,
                                        const std::vector<ComponentData>& comps);

// Greedy basis of the left ideal generated by the idempotent e: the elements
// g*e (group order) that grow the span.
std::vector<AlgebraElement> idempotent_module_basis(const AlgebraElement& e);

// Basis of the cyclic submodule generated by x, transported from a basis of
// the ideal of e: rows b_i * x' where x' is x or its first translate g*x with
// e*(g*x) != 0 (E_NO_TRANSLATE when none exists).
std::vector<Vec> basis_via_idempotent(const Vec& x, const AlgebraElement& e,
                                      const std::vector<AlgebraElement>& ideal_basis);

// Structured basis of a record's code: per chosen simple, the transported
// ideal basis of that component's block idempotent.  block_idems must hold
// one idempotent per component whose ideal has the component's simple
// dimension (E_INPUT otherwise).
std::vector<Vec> code_basis(const Group& G, const CodeRecord& rec,
                            const std::vector<ComponentData>& comps,
                            const std::vector<AlgebraElement>& block_idems);

// For each component pick an idempotent whose left ideal is one simple: the
// central primitive one when its multiplicity in F[G] is 1, otherwise the
// first user-supplied idempotent inside the component with ideal dimension d
// (E_INPUT when a component needs one and none fits).
std::vector<AlgebraElement> pick_block_idempotents(const Group& G,
                                                   const std::vector<ComponentData>& comps,
                                                   const std::vector<AlgebraElement>& user_idems);

}  // namespace ginv
