#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "ginv/linalg.hpp"

namespace ginv {

// A finite matrix group, closed from its generators by breadth-first
// multiplication.  Element 0 is the identity; discovery order is the
// canonical element order used everywhere downstream (orbits, algebra
// coefficients, regular representations).
class GroupTable {
 public:
  static constexpr std::uint32_t kDefaultMaxOrder = 10000;
  // Full multiplication table kept when the order stays at or below this.
  static constexpr std::uint32_t kMulTableLimit = 2048;

  GroupTable(Field f, std::vector<Matrix> generators, std::uint32_t max_order);

  const Field& field() const { return f_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elems_.size()); }
  const std::vector<Matrix>& elements() const { return elems_; }
  const Matrix& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t generator_count() const { return static_cast<std::uint32_t>(gen_idx_.size()); }
  // Index (into elements) of the i-th input generator.
  std::uint32_t generator_index(std::uint32_t i) const { return gen_idx_[i]; }

  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse(std::uint32_t i) const { return inv_[i]; }
  std::uint32_t index_of(const Matrix& m) const;  // E_INPUT if not an element

  // gcd(|G|, char F) == 1, the semisimplicity criterion.
  bool semisimple() const { return order() % f_->p() != 0; }

  // Classes sorted by smallest member index; members sorted ascending.
  const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;

 private:
  Field f_;
  std::uint32_t n_;
  std::vector<Matrix> elems_;
  std::vector<std::uint32_t> gen_idx_;
  std::vector<std::uint32_t> inv_;
  std::map<std::vector<fel>, std::uint32_t> index_;
  // word_[i]: input-generator word reaching element i from the identity
  std::vector<std::vector<std::uint32_t>> word_;
  // gen_step_[i][s] = index of elems[i] * generators[s]
  std::vector<std::vector<std::uint32_t>> gen_step_;
  std::vector<std::vector<std::uint32_t>> mul_table_;  // empty above kMulTableLimit
  mutable std::vector<std::vector<std::uint32_t>> classes_;  // built on first use
};

using Group = std::shared_ptr<const GroupTable>;

Group build_group(const Field& f, std::vector<Matrix> generators,
                  std::uint32_t max_order = GroupTable::kDefaultMaxOrder);

}  // namespace ginv
