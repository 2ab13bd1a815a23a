#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginv/field.hpp"

namespace ginv {

using Vec = std::vector<fel>;

// Dense row-major matrix over a shared field context.
struct Matrix {
  Field f;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<fel> a;  // rows*cols entries

  Matrix() = default;
  Matrix(Field field, std::uint32_t r, std::uint32_t c)
      : f(std::move(field)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  fel& at(std::uint32_t i, std::uint32_t j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  fel at(std::uint32_t i, std::uint32_t j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  Vec row(std::uint32_t i) const { return Vec(a.begin() + static_cast<std::size_t>(i) * cols, a.begin() + static_cast<std::size_t>(i + 1) * cols); }
  void set_row(std::uint32_t i, const Vec& v);

  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Matrix identity_matrix(const Field& f, std::uint32_t n);
Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::uint32_t cols);
Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix mat_add(const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
Vec mat_vec(const Matrix& A, const Vec& v);
bool is_zero(const Matrix& A);

// Elementary row reduction to the unique reduced row echelon form; zero rows
// are dropped.  The pivot list gives the pivot column of each surviving row.
struct Rref {
  Matrix mat;                      // rank x cols, strict RREF
  std::vector<std::uint32_t> pivots;
};
Rref rref(const Matrix& A);

std::uint32_t rank(const Matrix& A);
Matrix inverse(const Matrix& A);             // E_SINGULAR_GENERATOR if singular
Matrix kernel(const Matrix& A);              // rows span the right null space {v : Av = 0}
Matrix image(const Matrix& A);               // RREF basis of the column space

// A subspace of F^n held by its RREF basis; RREF rows are the identity card,
// so equality of submodules is entrywise equality here.
class Submodule {
 public:
  Submodule() = default;
  explicit Submodule(Rref r) : basis_(std::move(r.mat)), pivots_(std::move(r.pivots)) {}
  static Submodule span(const Matrix& rows) { return Submodule(rref(rows)); }
  static Submodule zero(const Field& f, std::uint32_t n) { return Submodule(Rref{Matrix(f, 0, n), {}}); }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::uint32_t dim() const { return basis_.rows; }
  std::uint32_t ambient() const { return basis_.cols; }

  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;
  // Coefficients of v over the basis rows (read off at pivot columns), or
  // nullopt when v lies outside the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  // Flattened basis entries; two Submodules of one ambient space are equal
  // iff their keys are equal.
  std::vector<fel> key() const;

  bool operator==(const Submodule& o) const { return basis_ == o.basis_; }
  bool operator<(const Submodule& o) const;

 private:
  Matrix basis_;
  std::vector<std::uint32_t> pivots_;
};

Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);

// Vector helpers shared by the CLI and tests: prime fields print as compact
// digit strings when p <= 9 and comma-separated otherwise; extension fields
// print one parenthesized coefficient tuple per entry.
std::string vec_to_string(const Field& f, const Vec& v);
Vec vec_from_string(const Field& f, const std::string& s);

}  // namespace ginv
