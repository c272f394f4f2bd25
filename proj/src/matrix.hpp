#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hclab {

// Dense row-major matrix. The zero element is stored so that products and
// fresh matrices can be formed without access to the field.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const S& zero) : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }
  S& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<S>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::Internal, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (size_t i = 0; i < a.rows_; ++i) {
      S* out = &r.data_[i * r.cols_];
      for (size_t l = 0; l < a.cols_; ++l) {
        const S& x = a.data_[i * a.cols_ + l];
        if (is_structural_zero(x, a.zero_)) continue;
        const S* row = &b.data_[l * b.cols_];
        for (size_t j = 0; j < b.cols_; ++j) out[j] += x * row[j];
      }
    }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, zero_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Matrix r(nr, nc, zero_);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(size_t r0, size_t c0, const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }

  Matrix column(size_t c) const { return block(0, c, rows_, 1); }

 private:
  // Skipping exact zeros is only an optimisation; any value compares unequal for
  // types without exact equality and is then multiplied normally.
  static bool is_structural_zero(const S& x, const S& zero) {
    if constexpr (requires { x == zero; }) {
      return x == zero;
    } else {
      return false;
    }
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::Internal, "matrix shape mismatch");
  }

  size_t rows_ = 0, cols_ = 0;
  S zero_{};
  std::vector<S> data_;
};

namespace la {

template <class F>
using Mat = Matrix<typename F::value_type>;

template <class F>
Mat<F> zeros(const F& f, size_t r, size_t c) {
  return Mat<F>(r, c, f.zero());
}

template <class F>
Mat<F> identity(const F& f, size_t n) {
  Mat<F> m(n, n, f.zero());
  for (size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Mat<F> scalar(const F& f, size_t n, const typename F::value_type& s) {
  Mat<F> m(n, n, f.zero());
  for (size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

template <class F>
double max_magnitude(const F& f, const Mat<F>& a) {
  double m = 0;
  for (const auto& x : a.data()) m = std::max(m, f.magnitude(x));
  return m;
}

template <class F>
bool is_zero(const F& f, const Mat<F>& a, double scale = 1.0) {
  for (const auto& x : a.data())
    if (!f.close(x, f.zero(), scale)) return false;
  return true;
}

template <class F>
bool equal(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  double scale = std::max(max_magnitude(f, a), max_magnitude(f, b));
  for (size_t i = 0; i < a.data().size(); ++i)
    if (!f.close(a.data()[i], b.data()[i], scale)) return false;
  return true;
}

// First entry (row, col) where a and b differ.
template <class F>
std::optional<std::pair<size_t, size_t>> first_difference(const F& f, const Mat<F>& a, const Mat<F>& b) {
  double scale = std::max(max_magnitude(f, a), max_magnitude(f, b));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!f.close(a(i, j), b(i, j), scale)) return std::make_pair(i, j);
  return std::nullopt;
}

// Row echelon form in place; returns pivot columns.
template <class F>
std::vector<size_t> row_reduce(const F& f, Mat<F>& a, bool reduced = true) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t best = a.rows();
    double best_score = 0;
    for (size_t i = r; i < a.rows(); ++i) {
      double s = f.score(a(i, c));
      if (s > best_score && !f.is_zero(a(i, c))) {
        best_score = s;
        best = i;
        if constexpr (F::exact) break;
      }
    }
    if (best == a.rows()) continue;
    if (best != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
    auto piv_inv = f.inv(a(r, c));
    for (size_t j = c; j < a.cols(); ++j) a(r, j) = piv_inv * a(r, j);
    for (size_t i = reduced ? 0 : r + 1; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      auto t = a(i, c);
      for (size_t j = c; j < a.cols(); ++j) a(i, j) -= t * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
size_t rank(const F& f, Mat<F> a) {
  return row_reduce(f, a, false).size();
}

// Columns form a basis of {x : a x = 0}.
template <class F>
Mat<F> nullspace(const F& f, Mat<F> a) {
  auto pivots = row_reduce(f, a, true);
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  size_t nfree = a.cols() - pivots.size();
  Mat<F> basis(a.cols(), nfree, f.zero());
  size_t col = 0;
  for (size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    basis(c, col) = f.one();
    for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], col) = -a(r, c);
    ++col;
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& a) {
  const size_t n = a.rows();
  if (a.cols() != n) fail(ErrorKind::Internal, "inverse of a non-square matrix");
  Mat<F> aug(n, 2 * n, f.zero());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, identity(f, n));
  auto pivots = row_reduce(f, aug, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

template <class F>
Mat<F> power(const F& f, Mat<F> a, size_t e) {
  Mat<F> r = identity(f, a.rows());
  while (e) {
    if (e & 1) r = r * a;
    e >>= 1;
    if (e) a = a * a;
  }
  return r;
}

// Basis (as columns) of the column space.
template <class F>
Mat<F> column_space(const F& f, const Mat<F>& a) {
  Mat<F> t = a.transpose();
  auto pivots = row_reduce(f, t, true);
  Mat<F> out(a.rows(), pivots.size(), f.zero());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (size_t i = 0; i < a.rows(); ++i) out(i, r) = t(r, i);
  return out;
}

template <class F>
Mat<F> hconcat(const F& f, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r(a.rows(), a.cols() + b.cols(), f.zero());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

// Basis of the intersection of the column spans of u and v.
template <class F>
Mat<F> intersect(const F& f, const Mat<F>& u, const Mat<F>& v) {
  if (u.cols() == 0 || v.cols() == 0) return Mat<F>(u.rows(), 0, f.zero());
  Mat<F> k = nullspace(f, hconcat(f, u, -v));
  Mat<F> coeffs = k.block(0, 0, u.cols(), k.cols());
  return column_space(f, u * coeffs);
}

// Solves a x = b for a with independent columns spanning b's columns; nullopt otherwise.
template <class F>
std::optional<Mat<F>> solve(const F& f, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> aug = hconcat(f, a, b);
  auto pivots = row_reduce(f, aug, true);
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] >= a.cols()) return std::nullopt;
  if (pivots.size() != a.cols()) return std::nullopt;
  return aug.block(0, a.cols(), a.cols(), b.cols());
}

// Kronecker product.
template <class F>
Mat<F> kron(const F& f, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r(a.rows() * b.rows(), a.cols() * b.cols(), f.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

}  // namespace la
}  // namespace hclab
