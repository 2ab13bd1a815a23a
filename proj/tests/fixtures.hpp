#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ginv/group.hpp"
#include "ginv/linalg.hpp"

namespace fixtures {

// F_2^9 under the coordinate shift by three places (cyclic of order 3).
ginv::Group gf2_shift3();

// F_5^9 under a 9-dimensional faithful action of the symmetric group on
// three letters, generated by one element of order 3 and one of order 2.
ginv::Group gf5_s3();

// F_3^4 under the coordinate involution (a0 a1)(a2 a3).
ginv::Group gf3_swap();

// F_3^4 under the shift by two places.
ginv::Group gf3_shift2();

// F_3^2 under negation.
ginv::Group gf3_neg();

// The 4x4 permutation matrix over GF(3) that intertwines the shift-by-two
// action with the regular-basis action.
ginv::Matrix gf3_m_matrix();

// A random small instance with gcd(|G|, q) = 1: q in {2,3,5}, n <= 12,
// order <= 12.  Deterministic per seed.
ginv::Group random_instance(std::mt19937_64& rng);

ginv::Matrix matrix_of(const ginv::Field& f, const std::vector<std::vector<ginv::fel>>& rows);

}  // namespace fixtures
