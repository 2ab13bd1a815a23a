#pragma once

#include <cstdint>
#include <vector>

#include "ginv/algebra.hpp"
#include "ginv/group.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

inline constexpr std::uint64_t kDefaultScanCap = std::uint64_t{1} << 24;

// All distinct images g*v in group element order (first occurrence kept).
std::vector<Vec> orbit(const Group& G, const Vec& v);

// The smallest submodule containing v: the span of its orbit.
Submodule cyclic_submodule(const Group& G, const Vec& v);

// Is `other` inside the cyclic submodule generated by `gen`?
bool cyclic_contains(const Group& G, const Vec& gen, const Vec& other);

// Image of a central element acting on F^n (E_NOT_CENTRAL otherwise).
Submodule homogeneous_component_central(const AlgebraElement& f);

// Submodule generated by the image of an arbitrary idempotent: the sum of
// the cyclic submodules of e*b over the canonical basis vectors b
// (E_NOT_IDEMPOTENT otherwise).
Submodule homogeneous_component_general(const AlgebraElement& e);

// One simple submodule, named by its canonical generator: the smallest
// vector (lexicographic on coefficient encoding) in a smallest orbit.
struct SimpleEntry {
  Vec generator;
  Submodule mod;
  std::uint64_t orbit_size = 0;
};

// Smallest dimension of a nonzero cyclic submodule of H; within one
// homogeneous component this is the dimension of its simple summands.
// E_ZERO_MODULE on the zero module, E_COMPONENT_TOO_LARGE when q^dim(H)
// exceeds the scan cap.
std::uint32_t simple_dimension(const Group& G, const Submodule& H,
                               std::uint64_t scan_cap = kDefaultScanCap);

// All distinct simple submodules of the homogeneous component H, sorted by
// canonical generator.  d must equal the component's simple dimension
// (E_INCONSISTENT_INPUT otherwise).
std::vector<SimpleEntry> enumerate_simples(const Group& G, const Submodule& H, std::uint32_t d,
                                           std::uint64_t scan_cap = kDefaultScanCap);

// One homogeneous component of F^n with everything later stages need.
struct ComponentData {
  AlgebraElement idem;        // central primitive idempotent of this block
  Submodule component;        // H = e(F^n)
  std::uint32_t simple_dim;   // d: dimension of each simple summand
  std::uint32_t mult_in_M;    // multiplicity of the simple in F^n (dim H / d)
  std::uint32_t mult_in_A;    // multiplicity of the simple in F[G] itself
  std::vector<SimpleEntry> simples;
};

// Components of F^n for the given central primitive idempotents, in input
// order; idempotents acting as zero are skipped.
std::vector<ComponentData> analyze_components(const Group& G,
                                              const std::vector<AlgebraElement>& idems,
                                              std::uint64_t scan_cap = kDefaultScanCap,
                                              bool parallel = false);

}  // namespace ginv
