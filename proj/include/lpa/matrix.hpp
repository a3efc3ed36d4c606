#pragma once

#include "lpa/laurent.hpp"
#include "lpa/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const {
    for (const auto& v : data_)
      if (!is_zero_value(v)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }
  /// col[dst] += col[src] * factor
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += (*this)(r, src) * factor;
  }
  void scale_row(std::size_t r, const T& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = factor * (*this)(r, c);
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_value(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero_value(b(k, j))) out(i, j) += aik * b(k, j);
      }
    return out;
  }

 private:
  static bool is_zero_value(const T& v) {
    if constexpr (requires { v.is_zero(); })
      return v.is_zero();
    else
      return sgn(v) == 0;
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

/// Entrywise involution composed with transpose.
LaurentMatrix conjugate_transpose(const LaurentMatrix& m, Involution inv);

/// Determinant by cofactor expansion (sizes used here are small).
LaurentPoly determinant(const LaurentMatrix& m);

std::string to_string(const LaurentMatrix& m);

/// Parses rows separated by ';' and entries by ',', optionally wrapped in
/// brackets: "x, 0; 0, 1 + x".
LaurentMatrix parse_laurent_matrix(std::string_view text);

// ---------------------------------------------------------------------------
// Linear algebra over an exact field (Scalar or mpq_class).

namespace field {

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const mpq_class& q) { return sgn(q) == 0; }
inline Scalar inverse(const Scalar& s) { return s.inverse(); }
inline mpq_class inverse(const mpq_class& q) {
  if (sgn(q) == 0) throw std::domain_error("division by zero");
  return 1 / q;
}

}  // namespace field

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && field::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, row);
    T inv = field::inverse(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field::is_zero(m(r, col))) continue;
      T factor = -m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!field::is_zero(m(row, c))) m(r, c) += factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

/// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m v = b, or nothing when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side size mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace lpa
