#include "ginv/group.hpp"

#include <algorithm>

#include "ginv/errors.hpp"

namespace ginv {

GroupTable::GroupTable(Field f, std::vector<Matrix> generators, std::uint32_t max_order)
    : f_(std::move(f)) {
  require(!generators.empty(), Err::Input, "group needs at least one generator");
  n_ = generators[0].rows;
  for (const Matrix& g : generators) {
    require(g.rows == g.cols, Err::DimMismatch, "group generator must be square");
    require(g.rows == n_, Err::DimMismatch, "group generators must share one dimension");
    require(g.f->p() == f_->p() && g.f->m() == f_->m(), Err::DimMismatch,
            "group generator field mismatch");
    require(rank(g) == n_, Err::SingularGenerator, "group generator is not invertible");
  }

  // Breadth-first closure: start at the identity, repeatedly right-multiply
  // by the input generators in order.  Discovery order is deterministic.
  const std::uint32_t k = static_cast<std::uint32_t>(generators.size());
  elems_.push_back(identity_matrix(f_, n_));
  index_.emplace(elems_[0].a, 0);
  word_.push_back({});
  for (std::uint32_t i = 0; i < elems_.size(); ++i) {
    gen_step_.emplace_back(k, 0);
    for (std::uint32_t s = 0; s < k; ++s) {
      Matrix prod = mat_mul(elems_[i], generators[s]);
      auto [it, fresh] = index_.emplace(prod.a, static_cast<std::uint32_t>(elems_.size()));
      if (fresh) {
        require(elems_.size() < max_order, Err::OrderExceeded,
                "group order exceeds the configured bound");
        elems_.push_back(std::move(prod));
        std::vector<std::uint32_t> w = word_[i];
        w.push_back(s);
        word_.push_back(std::move(w));
      }
      gen_step_[i][s] = it->second;
    }
  }

  gen_idx_.resize(k);
  for (std::uint32_t s = 0; s < k; ++s) gen_idx_[s] = gen_step_[0][s];

  inv_.resize(order());
  for (std::uint32_t i = 0; i < order(); ++i) {
    auto it = index_.find(ginv::inverse(elems_[i]).a);
    require(it != index_.end(), Err::Internal, "group closure is missing an inverse");
    inv_[i] = it->second;
  }

  if (order() <= kMulTableLimit) {
    mul_table_.assign(order(), std::vector<std::uint32_t>(order(), 0));
    for (std::uint32_t i = 0; i < order(); ++i)
      for (std::uint32_t j = 0; j < order(); ++j) {
        std::uint32_t r = i;
        for (std::uint32_t s : word_[j]) r = gen_step_[r][s];
        mul_table_[i][j] = r;
      }
  }
}

std::uint32_t GroupTable::mul(std::uint32_t i, std::uint32_t j) const {
  if (!mul_table_.empty()) return mul_table_[i][j];
  std::uint32_t r = i;
  for (std::uint32_t s : word_[j]) r = gen_step_[r][s];
  return r;
}

std::uint32_t GroupTable::index_of(const Matrix& m) const {
  auto it = index_.find(m.a);
  require(it != index_.end(), Err::Input, "matrix is not a group element");
  return it->second;
}

const std::vector<std::vector<std::uint32_t>>& GroupTable::conjugacy_classes() const {
  if (!classes_.empty() || order() == 0) return classes_;
  std::vector<bool> seen(order(), false);
  for (std::uint32_t x = 0; x < order(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> cls;
    for (std::uint32_t g = 0; g < order(); ++g) {
      std::uint32_t y = mul(mul(inv_[g], x), g);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  // Scanning unseen x ascending already yields classes sorted by min member.
  return classes_;
}

Group build_group(const Field& f, std::vector<Matrix> generators, std::uint32_t max_order) {
  return std::make_shared<const GroupTable>(f, std::move(generators), max_order);
}

}  // namespace ginv
