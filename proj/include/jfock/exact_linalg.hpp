#pragma once

#include <cassert>
#include <vector>

#include "jfock/errors.hpp"
#include "jfock/rational.hpp"

namespace jfock {

// Dense exact matrix over Rat or GRat. Sizes here are small (<= a few
// hundred), plain Gaussian elimination is plenty.
template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, T(0)) {}

  T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Mat transposed() const {
    Mat m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat m(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const T& xik = x(i, k);
        if (is_zero(xik)) continue;
        for (int j = 0; j < y.cols; ++j) m(i, j) += xik * y(k, j);
      }
    return m;
  }
  friend Mat operator+(Mat x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
  }
  friend Mat operator-(Mat x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
  }
  Mat operator*(const T& s) const {
    Mat m = *this;
    for (auto& v : m.a) v *= s;
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& v : m.a) v = -v;
    return m;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    assert(int(v.size()) == cols);
    std::vector<T> out(rows, T(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < rows && i < cols; ++i) t += (*this)(i, i);
    return t;
  }
};

using MatQ = Mat<Rat>;
using MatG = Mat<GRat>;

// In-place row reduction to reduced echelon form; returns pivot columns.
template <class T>
std::vector<int> rref(Mat<T>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (!is_zero(m(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank_of(Mat<T> m) {
  return int(rref(m).size());
}

// Basis of the right nullspace, one vector per column.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<T> v(m.cols, T(0));
    v[c] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(int(i), c);
    out.push_back(std::move(v));
  }
  return out;
}

// Solve m x = b. Throws SingularElement if inconsistent or underdetermined.
template <class T>
std::vector<T> solve(Mat<T> m, const std::vector<T>& b) {
  assert(int(b.size()) == m.rows);
  Mat<T> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) throw SingularElement("inconsistent linear system");
  if (int(piv.size()) != m.cols) throw SingularElement("underdetermined linear system");
  std::vector<T> x(m.cols, T(0));
  for (int i = 0; i < int(piv.size()); ++i) x[piv[i]] = aug(i, m.cols);
  return x;
}

template <class T>
Mat<T> inverse(const Mat<T>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto piv = rref(aug);
  if (int(piv.size()) != n || piv.back() != n - 1) throw SingularElement("singular matrix");
  Mat<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Maintains an exact row space in reduced echelon form; used for span
// closures and rank bookkeeping.
template <class T>
struct SpanBasis {
  int dim;
  std::vector<std::vector<T>> rows;  // reduced, each with a leading pivot
  std::vector<int> pivots;

  explicit SpanBasis(int d) : dim(d) {}

  int rank() const { return int(rows.size()); }

  // Reduces v against the basis in place; returns its pivot or -1.
  int reduce(std::vector<T>& v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      const T& c = v[pivots[i]];
      if (is_zero(c)) continue;
      T f = c;
      const auto& r = rows[i];
      for (int j = pivots[i]; j < dim; ++j)
        if (!is_zero(r[j])) v[j] -= f * r[j];
    }
    for (int j = 0; j < dim; ++j)
      if (!is_zero(v[j])) return j;
    return -1;
  }

  // Returns true if v enlarged the span.
  bool insert(std::vector<T> v) {
    int p = reduce(v);
    if (p < 0) return false;
    T inv = T(1) / v[p];
    for (int j = p; j < dim; ++j) v[j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      T f = rows[i][p];
      if (is_zero(f)) continue;
      for (int j = p; j < dim; ++j) rows[i][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    // keep rows ordered by pivot
    for (size_t i = rows.size(); i-- > 1;) {
      if (pivots[i - 1] > pivots[i]) {
        std::swap(pivots[i - 1], pivots[i]);
        std::swap(rows[i - 1], rows[i]);
      } else break;
    }
    return true;
  }

  bool contains(std::vector<T> v) const { return reduce(v) < 0; }
};

}  // namespace jfock
