#pragma once

// Small dense linear algebra over an arbitrary field type.
//
// Dimensions in this library are tiny (at most a few dozen rows), so the
// algorithms are the textbook ones: Gauss-Jordan elimination with pivoting by
// magnitude. In exact mode any nonzero pivot is usable; in float mode pivots
// below `tol * scale` are treated as zero.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lcak/error.hpp"
#include "lcak/scalar.hpp"

namespace lcak {

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_columns(const std::vector<Vector<T>>& cols, int rows);
  static Matrix from_rows(const std::vector<Vector<T>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  Vector<T> column(int j) const;
  Vector<T> row(int i) const;
  void set_column(int j, const Vector<T>& v);

  Matrix transpose() const;
  T trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const T& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= T(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.multiply(b); }
  friend Vector<T> operator*(const Matrix& a, const Vector<T>& x) { return a.apply(x); }

  bool operator==(const Matrix& o) const = default;

  Matrix multiply(const Matrix& b) const;
  Vector<T> apply(const Vector<T>& x) const;

  const std::vector<T>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// ---- vector helpers -------------------------------------------------------

template <class T>
Vector<T> unit_vector(int n, int i) {
  Vector<T> v(n, T(0));
  v[i] = T(1);
  return v;
}

template <class T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vector<T> operator*(const T& s, Vector<T> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
Vector<T> operator-(Vector<T> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// x^T M y.
template <class T>
T bilinear(const Vector<T>& x, const Matrix<T>& m, const Vector<T>& y) {
  T s(0);
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    T row(0);
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

template <class T>
T max_abs(const Vector<T>& v) {
  T m(0);
  for (const auto& x : v) {
    T a = abs_value(x);
    if (a > m) m = a;
  }
  return m;
}

template <class T>
T max_abs(const Matrix<T>& m) {
  return max_abs(m.data());
}

template <class T>
bool is_zero_vector(const Vector<T>& v, double tol = kDefaultTolerance) {
  for (const auto& x : v)
    if (!is_zero(x, tol)) return false;
  return true;
}

// ---- factorizations and solvers --------------------------------------------

template <class T>
struct RowEchelon {
  Matrix<T> reduced;       // reduced row echelon form
  std::vector<int> pivots; // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

template <class T>
RowEchelon<T> rref(Matrix<T> m, double tol = kDefaultTolerance);

template <class T>
int rank(const Matrix<T>& m, double tol = kDefaultTolerance);

// Columns form a basis of {x : m x = 0}.
template <class T>
std::vector<Vector<T>> nullspace(const Matrix<T>& m, double tol = kDefaultTolerance);

// Some x with a x = b, or nullopt when inconsistent.
template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b,
                               double tol = kDefaultTolerance);

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, double tol = kDefaultTolerance);

template <class T>
T determinant(const Matrix<T>& m);

// Positive definiteness via symmetric Gaussian elimination (LDL^T pivots).
// Pivots must exceed `tol` in float mode and be > 0 in exact mode.
template <class T>
bool is_positive_definite(const Matrix<T>& m, double tol = kDefaultTolerance);

// Minimizes (a x - b)^T w (a x - b) through the normal equations. `w` must be
// positive definite. Returns the minimizer of least norm among solutions of the
// normal equations (free variables set to zero).
template <class T>
Vector<T> weighted_least_squares(const Matrix<T>& a, const Vector<T>& b, const Matrix<T>& w,
                                 double tol = kDefaultTolerance);

// Row-reduced basis of the span of the given vectors.
template <class T>
std::vector<Vector<T>> span_basis(const std::vector<Vector<T>>& vecs,
                                  double tol = kDefaultTolerance);

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = scalar_cast<To>(m(i, j));
  return out;
}

template <class To, class From>
Vector<To> vector_cast(const Vector<From>& v) {
  Vector<To> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(scalar_cast<To>(x));
  return out;
}

extern template class Matrix<Rational>;
extern template class Matrix<double>;

}  // namespace lcak
