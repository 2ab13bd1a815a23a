#include "ginv/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ginv {

void Matrix::set_row(std::uint32_t i, const Vec& v) {
  require(v.size() == cols, Err::DimMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), a.begin() + static_cast<std::size_t>(i) * cols);
}

Matrix identity_matrix(const Field& f, std::uint32_t n) {
  Matrix I(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::uint32_t cols) {
  Matrix M(f, static_cast<std::uint32_t>(rows.size()), cols);
  for (std::uint32_t i = 0; i < rows.size(); ++i) M.set_row(i, rows[i]);
  return M;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
  require(A.cols == B.rows, Err::DimMismatch, "matrix product shape mismatch");
  const Fq& F = *A.f;
  Matrix C(A.f, A.rows, B.cols);
  for (std::uint32_t i = 0; i < A.rows; ++i)
    for (std::uint32_t k = 0; k < A.cols; ++k) {
      fel aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::uint32_t j = 0; j < B.cols; ++j) {
        fel prod = F.mul(aik, B.at(k, j));
        if (prod) C.at(i, j) = F.add(C.at(i, j), prod);
      }
    }
  return C;
}

Matrix mat_add(const Matrix& A, const Matrix& B) {
  require(A.rows == B.rows && A.cols == B.cols, Err::DimMismatch, "matrix sum shape mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.f->add(A.a[i], B.a[i]);
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.f, A.cols, A.rows);
  for (std::uint32_t i = 0; i < A.rows; ++i)
    for (std::uint32_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Vec mat_vec(const Matrix& A, const Vec& v) {
  require(v.size() == A.cols, Err::DimMismatch, "matrix-vector shape mismatch");
  const Fq& F = *A.f;
  Vec out(A.rows, 0);
  for (std::uint32_t i = 0; i < A.rows; ++i) {
    fel acc = 0;
    for (std::uint32_t j = 0; j < A.cols; ++j) {
      fel aij = A.at(i, j);
      if (aij && v[j]) acc = F.add(acc, F.mul(aij, v[j]));
    }
    out[i] = acc;
  }
  return out;
}

bool is_zero(const Matrix& A) {
  return std::all_of(A.a.begin(), A.a.end(), [](fel x) { return x == 0; });
}

Rref rref(const Matrix& A) {
  const Fq& F = *A.f;
  Matrix M = A;
  std::vector<std::uint32_t> pivots;
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < M.cols && r < M.rows; ++c) {
    std::uint32_t piv = r;
    while (piv < M.rows && M.at(piv, c) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != r)
      for (std::uint32_t j = 0; j < M.cols; ++j) std::swap(M.at(r, j), M.at(piv, j));
    fel inv = F.inv(M.at(r, c));
    if (inv != 1)
      for (std::uint32_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
    for (std::uint32_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      fel fct = M.at(i, c);
      if (fct == 0) continue;
      for (std::uint32_t j = c; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(fct, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix R(A.f, r, M.cols);
  std::copy(M.a.begin(), M.a.begin() + static_cast<std::size_t>(r) * M.cols, R.a.begin());
  return Rref{std::move(R), std::move(pivots)};
}

std::uint32_t rank(const Matrix& A) { return rref(A).mat.rows; }

Matrix inverse(const Matrix& A) {
  require(A.rows == A.cols, Err::DimMismatch, "inverse of a non-square matrix");
  const std::uint32_t n = A.rows;
  if (n == 0) return A;
  Matrix aug(A.f, n, 2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  Rref r = rref(aug);
  require(r.mat.rows == n && r.pivots.size() == n && r.pivots[n - 1] == n - 1,
          Err::SingularGenerator, "matrix is singular");
  Matrix inv(A.f, n, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Matrix kernel(const Matrix& A) {
  const Fq& F = *A.f;
  Rref r = rref(A);
  std::vector<bool> is_pivot(A.cols, false);
  for (std::uint32_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::uint32_t c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(A.cols, 0);
    v[c] = 1;
    for (std::uint32_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = F.neg(r.mat.at(i, c));
    basis.push_back(std::move(v));
  }
  return from_rows(A.f, basis, A.cols);
}

Matrix image(const Matrix& A) { return rref(transpose(A)).mat; }

bool Submodule::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Submodule::contains(const Submodule& other) const {
  for (std::uint32_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().row(i))) return false;
  return true;
}

std::optional<Vec> Submodule::coordinates(const Vec& v) const {
  require(v.size() == basis_.cols, Err::DimMismatch, "vector length mismatch");
  const Fq& F = *basis_.f;
  Vec w = v;
  Vec coord(basis_.rows, 0);
  for (std::uint32_t i = 0; i < basis_.rows; ++i) {
    fel c = w[pivots_[i]];
    if (c == 0) continue;
    coord[i] = c;
    for (std::uint32_t j = pivots_[i]; j < basis_.cols; ++j)
      w[j] = F.sub(w[j], F.mul(c, basis_.at(i, j)));
  }
  for (fel x : w)
    if (x != 0) return std::nullopt;
  return coord;
}

std::vector<fel> Submodule::key() const { return basis_.a; }

bool Submodule::operator<(const Submodule& o) const {
  if (basis_.cols != o.basis_.cols) return basis_.cols < o.basis_.cols;
  if (basis_.a != o.basis_.a) return basis_.a < o.basis_.a;
  return basis_.rows < o.basis_.rows;
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  require(a.ambient() == b.ambient(), Err::DimMismatch, "sum of subspaces of different ambient spaces");
  Matrix stacked(a.basis().f ? a.basis().f : b.basis().f, a.dim() + b.dim(), a.ambient());
  for (std::uint32_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
  for (std::uint32_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
  return Submodule::span(stacked);
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
  // intersection in their right half.
  require(a.ambient() == b.ambient(), Err::DimMismatch, "intersection of subspaces of different ambient spaces");
  const std::uint32_t n = a.ambient();
  Field f = a.basis().f ? a.basis().f : b.basis().f;
  Matrix Z(f, a.dim() + b.dim(), 2 * n);
  for (std::uint32_t i = 0; i < a.dim(); ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      Z.at(i, j) = a.basis().at(i, j);
      Z.at(i, n + j) = a.basis().at(i, j);
    }
  for (std::uint32_t i = 0; i < b.dim(); ++i)
    for (std::uint32_t j = 0; j < n; ++j) Z.at(a.dim() + i, j) = b.basis().at(i, j);
  Rref r = rref(Z);
  std::vector<Vec> inter;
  for (std::uint32_t i = 0; i < r.mat.rows; ++i) {
    bool left_zero = true;
    for (std::uint32_t j = 0; j < n && left_zero; ++j) left_zero = r.mat.at(i, j) == 0;
    if (left_zero) {
      Vec v(n);
      for (std::uint32_t j = 0; j < n; ++j) v[j] = r.mat.at(i, n + j);
      inter.push_back(std::move(v));
    }
  }
  return Submodule::span(from_rows(f, inter, n));
}

std::string vec_to_string(const Field& f, const Vec& v) {
  std::ostringstream out;
  if (f->prime_field() && f->q() <= 9) {
    for (fel x : v) out << x;
  } else if (f->prime_field()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ',';
      out << v[i];
    }
  } else {
    for (fel x : v) out << f->to_string(x);
  }
  return out.str();
}

Vec vec_from_string(const Field& f, const std::string& s) {
  Vec v;
  if (f->prime_field() && f->q() <= 9) {
    for (char c : s) {
      require(c >= '0' && c <= '9', Err::Input, "vector digit string contains a non-digit");
      v.push_back(f->from_int(c - '0', "vector entry"));
    }
    return v;
  }
  if (f->prime_field()) {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
      v.push_back(f->from_int(std::stoll(tok), "vector entry"));
    return v;
  }
  // extension field: sequence of (c0,c1,...) groups
  std::size_t i = 0;
  while (i < s.size()) {
    require(s[i] == '(', Err::Input, "expected '(' in extension-field vector literal");
    std::size_t close = s.find(')', i);
    require(close != std::string::npos, Err::Input, "unterminated coefficient tuple");
    std::istringstream in(s.substr(i + 1, close - i - 1));
    std::string tok;
    std::vector<fel> digits;
    while (std::getline(in, tok, ','))
      digits.push_back(static_cast<fel>(std::stoll(tok)));
    v.push_back(f->encode(digits));
    i = close + 1;
  }
  return v;
}

}  // namespace ginv
