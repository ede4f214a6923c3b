#include "quivergrass/linalg.hpp"

#include <algorithm>

#include "quivergrass/error.hpp"

namespace qg {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorCode::DimensionMismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_echelon(const Matrix& m) {
  RowSpace space(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) space.insert(m.row(r));
  Echelon e;
  e.reduced = Matrix::from_rows(m.cols(), space.basis());
  e.pivots = space.pivots();
  return e;
}

std::size_t rank(const Matrix& m) {
  RowSpace space(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) space.insert(m.row(r));
  return space.dim();
}

Matrix nullspace(const Matrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return Matrix::from_columns(m.cols(), basis);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

namespace {

std::size_t leading(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return v.size();
}

void axpy(Vec& target, const Rational& factor, const Vec& source, std::size_t from) {
  for (std::size_t i = from; i < source.size(); ++i)
    if (sgn(source[i]) != 0) target[i] -= factor * source[i];
}

}  // namespace

Vec RowSpace::reduce(Vec v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (sgn(c) == 0) continue;
    Rational factor = c;
    axpy(v, factor, rows_[r], pivots_[r]);
  }
  return v;
}

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = leading(v);
  if (p == v.size()) return false;
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  for (auto& row : rows_) {
    if (sgn(row[p]) == 0) continue;
    Rational factor = row[p];
    axpy(row, factor, v, p);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool RowSpace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<bool> RowSpace::pivot_mask() const {
  std::vector<bool> mask(ambient_, false);
  for (auto p : pivots_) mask[p] = true;
  return mask;
}

bool RowSpace::operator==(const RowSpace& other) const {
  return ambient_ == other.ambient_ && pivots_ == other.pivots_ && rows_ == other.rows_;
}

}  // namespace qg
