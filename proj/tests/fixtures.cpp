#include "fixtures.hpp"

#include "ginv/errors.hpp"

namespace fixtures {

using ginv::fel;
using ginv::Field;
using ginv::Group;
using ginv::Matrix;

Matrix matrix_of(const Field& f, const std::vector<std::vector<fel>>& rows) {
  Matrix M(f, static_cast<std::uint32_t>(rows.size()), static_cast<std::uint32_t>(rows[0].size()));
  for (std::uint32_t i = 0; i < M.rows; ++i)
    for (std::uint32_t j = 0; j < M.cols; ++j) M.at(i, j) = rows[i][j];
  return M;
}

namespace {

Matrix coordinate_shift(const Field& f, std::uint32_t n, std::uint32_t by) {
  Matrix M(f, n, n);
  for (std::uint32_t j = 0; j < n; ++j) M.at((j + by) % n, j) = 1;
  return M;
}

}  // namespace

Group gf2_shift3() {
  Field f = ginv::make_prime_field(2);
  return ginv::build_group(f, {coordinate_shift(f, 9, 3)});
}

Group gf5_s3() {
  Field f = ginv::make_prime_field(5);
  static const std::vector<std::vector<fel>> kX = {
      {0, 3, 4, 4, 0, 3, 3, 2, 1}, {4, 1, 0, 2, 0, 3, 1, 3, 2}, {0, 1, 2, 4, 4, 2, 1, 2, 2},
      {3, 0, 2, 3, 3, 0, 2, 2, 3}, {2, 0, 3, 3, 4, 3, 3, 2, 0}, {2, 0, 1, 4, 2, 0, 1, 4, 0},
      {0, 4, 4, 4, 3, 2, 1, 1, 0}, {2, 1, 1, 4, 1, 3, 3, 2, 3}, {1, 1, 2, 4, 1, 1, 0, 2, 2}};
  static const std::vector<std::vector<fel>> kY = {
      {0, 2, 0, 0, 1, 2, 0, 0, 0}, {4, 2, 0, 0, 4, 3, 0, 0, 0}, {2, 3, 4, 1, 0, 4, 1, 1, 1},
      {1, 1, 0, 2, 2, 3, 0, 3, 4}, {4, 3, 0, 1, 1, 4, 0, 3, 4}, {2, 4, 0, 2, 3, 0, 0, 1, 3},
      {1, 3, 0, 3, 4, 4, 1, 3, 0}, {0, 1, 0, 3, 2, 0, 0, 4, 0}, {0, 2, 0, 0, 1, 4, 0, 2, 0}};
  return ginv::build_group(f, {matrix_of(f, kX), matrix_of(f, kY)});
}

Group gf3_swap() {
  Field f = ginv::make_prime_field(3);
  return ginv::build_group(
      f, {matrix_of(f, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})});
}

Group gf3_shift2() {
  Field f = ginv::make_prime_field(3);
  return ginv::build_group(f, {coordinate_shift(f, 4, 2)});
}

Group gf3_neg() {
  Field f = ginv::make_prime_field(3);
  return ginv::build_group(f, {matrix_of(f, {{2, 0}, {0, 2}})});
}

Matrix gf3_m_matrix() {
  Field f = ginv::make_prime_field(3);
  return matrix_of(f, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}});
}

Group random_instance(std::mt19937_64& rng) {
  while (true) {
    const std::uint64_t qs[] = {2, 3, 5};
    std::uint64_t q = qs[rng() % 3];
    std::uint32_t max_n = q == 2 ? 10 : (q == 3 ? 8 : 6);
    std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % (max_n - 1));
    Field f = ginv::make_prime_field(q);

    auto random_monomial = [&]() {
      std::vector<std::uint32_t> perm(n);
      for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
      for (std::uint32_t i = n; i-- > 1;) std::swap(perm[i], perm[rng() % (i + 1)]);
      Matrix M(f, n, n);
      for (std::uint32_t j = 0; j < n; ++j)
        M.at(perm[j], j) = static_cast<fel>(1 + rng() % (q - 1));
      return M;
    };

    std::vector<Matrix> gens;
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng() % 2);
    for (std::uint32_t i = 0; i < count; ++i) gens.push_back(random_monomial());
    try {
      Group G = ginv::build_group(f, gens, 13);
      if (G->order() >= 2 && G->order() <= 12 && G->semisimple()) return G;
    } catch (const ginv::Error&) {
      // closure too big or a degenerate draw; redraw
    }
  }
}

}  // namespace fixtures
