#include "ginv/isomap.hpp"

#include <algorithm>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

// Row index and value of the single nonzero entry per column, or nullopt
// when the matrix is not monomial.
struct MonomialForm {
  std::vector<std::uint32_t> row;  // per column
  std::vector<fel> val;            // per column
};

std::optional<MonomialForm> monomial_form(const Matrix& A) {
  MonomialForm mf;
  mf.row.assign(A.cols, kUnset);
  mf.val.assign(A.cols, 0);
  std::vector<bool> row_hit(A.rows, false);
  if (A.rows != A.cols) return std::nullopt;
  for (std::uint32_t j = 0; j < A.cols; ++j) {
    for (std::uint32_t i = 0; i < A.rows; ++i) {
      if (A.at(i, j) == 0) continue;
      if (mf.row[j] != kUnset) return std::nullopt;  // two nonzeros in a column
      mf.row[j] = i;
      mf.val[j] = A.at(i, j);
    }
    if (mf.row[j] == kUnset) return std::nullopt;  // zero column
    if (row_hit[mf.row[j]]) return std::nullopt;   // two nonzeros in a row
    row_hit[mf.row[j]] = true;
  }
  return mf;
}

}  // namespace

RegularBasisRep build_regular_rep(const Group& G) {
  RegularBasisRep rep;
  rep.G = G;
  const std::uint32_t n = G->n();
  const std::uint32_t ord = G->order();
  require(ord > 0 && n % ord == 0, Err::BadT,
          "ambient dimension is not a multiple of the group order");
  rep.copies = n / ord;
  for (std::uint32_t s = 0; s < G->generator_count(); ++s) {
    Matrix R(G->field(), n, n);
    const std::uint32_t gs = G->generator_index(s);
    for (std::uint32_t c = 0; c < rep.copies; ++c)
      for (std::uint32_t h = 0; h < ord; ++h)
        R.at(c * ord + G->mul(gs, h), c * ord + h) = 1;
    rep.gen_action.push_back(std::move(R));
  }
  return rep;
}

bool check_weight_iso(const Matrix& A, const RegularBasisRep& rep) {
  const Group& G = rep.G;
  require(A.rows == G->n() && A.cols == G->n(), Err::DimMismatch,
          "candidate matrix has the wrong shape");
  require(monomial_form(A).has_value(), Err::NotMonomial, "candidate matrix is not monomial");
  for (std::uint32_t s = 0; s < G->generator_count(); ++s) {
    const Matrix& M = G->element(G->generator_index(s));
    if (!(mat_mul(A, M) == mat_mul(rep.gen_action[s], A))) return false;
  }
  return true;
}

std::optional<Matrix> search_weight_iso(const RegularBasisRep& rep, std::uint64_t budget) {
  const Group& G = rep.G;
  const Field& F = G->field();
  const std::uint32_t n = G->n();
  const std::uint32_t gens = G->generator_count();

  // A * M_s = R_s * A forces, per column j of M_s with entry m at row p(j):
  //   t(p(j)) = sigma_s(t(j))  and  c(p(j)) = c(j) * m^{-1},
  // where column j of A has value c(j) at row t(j).  Non-monomial generators
  // rule out any monomial intertwiner.
  std::vector<MonomialForm> gen_mf;
  std::vector<std::vector<std::uint32_t>> sigma(gens, std::vector<std::uint32_t>(n));
  for (std::uint32_t s = 0; s < gens; ++s) {
    auto mf = monomial_form(G->element(G->generator_index(s)));
    if (!mf) return std::nullopt;
    gen_mf.push_back(std::move(*mf));
    auto rmf = monomial_form(rep.gen_action[s]);
    require(rmf.has_value(), Err::Internal, "regular action is not monomial");
    for (std::uint32_t j = 0; j < n; ++j) sigma[s][j] = rmf->row[j];
  }

  std::vector<std::uint32_t> t(n, kUnset);   // target row per column
  std::vector<fel> c(n, 0);                  // scale per column
  std::vector<std::uint32_t> row_owner(n, kUnset);
  std::uint64_t nodes = 0;

  struct Pending {
    std::uint32_t col, row;
    fel scale;
  };

  // Assign everything forced by (col, row, scale); returns false on conflict.
  // Newly assigned columns are recorded for rollback.
  auto propagate = [&](std::uint32_t col, std::uint32_t row, fel scale,
                       std::vector<std::uint32_t>& trail) -> bool {
    std::vector<Pending> queue{{col, row, scale}};
    while (!queue.empty()) {
      Pending p = queue.back();
      queue.pop_back();
      if (t[p.col] != kUnset) {
        if (t[p.col] != p.row || c[p.col] != p.scale) return false;
        continue;
      }
      if (row_owner[p.row] != kUnset) return false;
      require(++nodes <= budget, Err::BudgetExceeded, "isometry search budget exhausted");
      t[p.col] = p.row;
      c[p.col] = p.scale;
      row_owner[p.row] = p.col;
      trail.push_back(p.col);
      for (std::uint32_t s = 0; s < gens; ++s) {
        std::uint32_t jj = gen_mf[s].row[p.col];  // p_s(col)
        fel sc = F->mul(p.scale, F->inv(gen_mf[s].val[p.col]));
        queue.push_back(Pending{jj, sigma[s][p.row], sc});
      }
    }
    return true;
  };

  auto rollback = [&](std::vector<std::uint32_t>& trail) {
    for (std::uint32_t col : trail) {
      row_owner[t[col]] = kUnset;
      t[col] = kUnset;
      c[col] = 0;
    }
    trail.clear();
  };

  std::vector<std::vector<std::uint32_t>> trails;
  std::vector<std::pair<std::uint32_t, std::pair<std::uint32_t, fel>>> frames;

  auto next_unassigned = [&]() -> std::uint32_t {
    for (std::uint32_t j = 0; j < n; ++j)
      if (t[j] == kUnset) return j;
    return kUnset;
  };

  // Depth-first over (row, scale) choices for the lowest unassigned column.
  std::uint32_t col = next_unassigned();
  std::uint32_t try_row = 0;
  fel try_scale = 1;
  while (true) {
    if (col == kUnset) {
      Matrix A(F, n, n);
      for (std::uint32_t j = 0; j < n; ++j) A.at(t[j], j) = c[j];
      require(check_weight_iso(A, rep), Err::Internal, "search produced a non-intertwiner");
      return A;
    }
    bool advanced = false;
    for (std::uint32_t r = try_row; r < n && !advanced; ++r) {
      if (row_owner[r] != kUnset) continue;
      for (fel s = (r == try_row ? try_scale : 1); s < F->q() && !advanced; ++s) {
        std::vector<std::uint32_t> trail;
        if (propagate(col, r, s, trail)) {
          frames.push_back({col, {r, s}});
          trails.push_back(std::move(trail));
          col = next_unassigned();
          try_row = 0;
          try_scale = 1;
          advanced = true;
        } else {
          rollback(trail);
        }
      }
    }
    if (advanced) continue;
    if (frames.empty()) return std::nullopt;  // search space exhausted
    col = frames.back().first;
    try_row = frames.back().second.first;
    try_scale = frames.back().second.second + 1;
    if (try_scale >= F->q()) {
      ++try_row;
      try_scale = 1;
    }
    frames.pop_back();
    rollback(trails.back());
    trails.pop_back();
  }
}

}  // namespace ginv
