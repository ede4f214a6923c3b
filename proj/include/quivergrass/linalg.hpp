#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "quivergrass/rational.hpp"

namespace qg {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& other) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Echelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
// Columns of the result form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Incrementally maintained reduced echelon basis of a subspace of K^n. The
// pivot of every stored row is its leftmost nonzero entry and all pivot
// columns are cleared in the other rows, so the basis is canonical.
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  // Returns true when v was independent of the current span.
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<bool> pivot_mask() const;

  bool operator==(const RowSpace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;             // sorted by pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace qg
