#include "lcak/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lcak {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      fail(ErrorCode::DimensionMismatch, "ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(const std::vector<Vector<T>>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) m.set_column(j, cols[j]);
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<Vector<T>>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      fail(ErrorCode::DimensionMismatch, "row length mismatch");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
Vector<T> Matrix<T>::column(int j) const {
  Vector<T> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

template <class T>
Vector<T> Matrix<T>::row(int i) const {
  return Vector<T>(data_.begin() + std::size_t(i) * cols_, data_.begin() + std::size_t(i + 1) * cols_);
}

template <class T>
void Matrix<T>::set_column(int j, const Vector<T>& v) {
  if (static_cast<int>(v.size()) != rows_) fail(ErrorCode::DimensionMismatch, "column length mismatch");
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
T Matrix<T>::trace() const {
  T s(0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

template <class T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

template <class T>
Matrix<T>& Matrix<T>::operator*=(const T& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

template <class T>
Matrix<T> Matrix<T>::multiply(const Matrix& b) const {
  if (cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const T& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += a * b(k, j);
    }
  return out;
}

template <class T>
Vector<T> Matrix<T>::apply(const Vector<T>& x) const {
  if (static_cast<int>(x.size()) != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  Vector<T> y(rows_, T(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

namespace {

template <class T>
double pivot_threshold(const Matrix<T>& m, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return 0.0;
  } else {
    return tol * std::max(1.0, to_double(max_abs(m)));
  }
}

template <class T>
bool usable_pivot(const T& x, double threshold) {
  if constexpr (ScalarTraits<T>::exact) {
    return x != 0;
  } else {
    return std::abs(x) > threshold;
  }
}

}  // namespace

template <class T>
RowEchelon<T> rref(Matrix<T> m, double tol) {
  const double threshold = pivot_threshold(m, tol);
  RowEchelon<T> out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int best = -1;
    T best_abs(0);
    for (int i = r; i < m.rows(); ++i) {
      T a = abs_value(m(i, c));
      if (usable_pivot(a, threshold) && (best < 0 || a > best_abs)) {
        best = i;
        best_abs = a;
        if constexpr (ScalarTraits<T>::exact) break;
      }
    }
    if (best < 0) {
      for (int i = r; i < m.rows(); ++i) m(i, c) = T(0);
      continue;
    }
    if (best != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    const T inv = T(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const T f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = T(0);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
int rank(const Matrix<T>& m, double tol) {
  return rref(m, tol).rank();
}

template <class T>
std::vector<Vector<T>> nullspace(const Matrix<T>& m, double tol) {
  const auto e = rref(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<T>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (int r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b, double tol) {
  if (static_cast<int>(b.size()) != a.rows()) fail(ErrorCode::DimensionMismatch, "solve: rhs length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto e = rref(aug, tol);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector<T> x(a.cols(), T(0));
  for (int r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, double tol) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  const auto e = rref(aug, tol);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <class T>
T determinant(const Matrix<T>& m_in) {
  if (m_in.rows() != m_in.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Matrix<T> m = m_in;
  const int n = m.rows();
  T det(1);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    T best_abs(0);
    for (int i = c; i < n; ++i) {
      T a = abs_value(m(i, c));
      if (a != 0 && (best < 0 || a > best_abs)) {
        best = i;
        best_abs = a;
      }
    }
    if (best < 0) return T(0);
    if (best != c) {
      for (int j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
      det = -det;
    }
    det *= m(c, c);
    const T inv = T(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const T f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
bool is_positive_definite(const Matrix<T>& m_in, double tol) {
  if (m_in.rows() != m_in.cols()) return false;
  Matrix<T> m = m_in;
  const int n = m.rows();
  const double threshold = pivot_threshold(m, tol);
  for (int c = 0; c < n; ++c) {
    const T p = m(c, c);
    if constexpr (ScalarTraits<T>::exact) {
      if (p <= 0) return false;
    } else {
      if (!(p > threshold)) return false;
    }
    for (int i = c + 1; i < n; ++i) {
      const T f = m(i, c) / p;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return true;
}

template <class T>
Vector<T> weighted_least_squares(const Matrix<T>& a, const Vector<T>& b, const Matrix<T>& w,
                                 double tol) {
  const Matrix<T> at_w = a.transpose() * w;
  const Matrix<T> normal = at_w * a;
  const Vector<T> rhs = at_w * b;
  auto x = solve(normal, rhs, tol);
  if (!x) {
    // The normal equations are always consistent; this only triggers when
    // rounding pushed a pivot across the float threshold.
    return Vector<T>(a.cols(), T(0));
  }
  return *x;
}

template <class T>
std::vector<Vector<T>> span_basis(const std::vector<Vector<T>>& vecs, double tol) {
  if (vecs.empty()) return {};
  const int n = static_cast<int>(vecs.front().size());
  const auto e = rref(Matrix<T>::from_rows(vecs, n), tol);
  std::vector<Vector<T>> basis;
  for (int r = 0; r < e.rank(); ++r) basis.push_back(e.reduced.row(r));
  return basis;
}

#define LCAK_INSTANTIATE_LINALG(T)                                                          \
  template class Matrix<T>;                                                                 \
  template RowEchelon<T> rref(Matrix<T>, double);                                           \
  template int rank(const Matrix<T>&, double);                                              \
  template std::vector<Vector<T>> nullspace(const Matrix<T>&, double);                      \
  template std::optional<Vector<T>> solve(const Matrix<T>&, const Vector<T>&, double);      \
  template std::optional<Matrix<T>> inverse(const Matrix<T>&, double);                      \
  template T determinant(const Matrix<T>&);                                                 \
  template bool is_positive_definite(const Matrix<T>&, double);                             \
  template Vector<T> weighted_least_squares(const Matrix<T>&, const Vector<T>&,             \
                                            const Matrix<T>&, double);                      \
  template std::vector<Vector<T>> span_basis(const std::vector<Vector<T>>&, double);

LCAK_INSTANTIATE_LINALG(Rational)
LCAK_INSTANTIATE_LINALG(double)

}  // namespace lcak
