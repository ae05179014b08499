#include "lcak/lie_algebra.hpp"

#include <sstream>

namespace lcak {

template <class T>
LieAlgebra<T>::LieAlgebra(int dim) : dim_(dim), dense_(std::size_t(dim) * dim * dim, T(0)) {
  if (dim < 1) fail(ErrorCode::DimensionMismatch, "Lie algebra dimension must be positive");
}

template <class T>
void LieAlgebra<T>::set(int i, int j, int k, const T& value) {
  dense_[index(i, j, k)] = value;
  dense_[index(j, i, k)] = -value;
}

namespace {

template <class T>
void check_range(int dim, const StructureConstant<T>& s) {
  auto bad = [dim](int x) { return x < 0 || x >= dim; };
  if (bad(s.i) || bad(s.j) || bad(s.k)) {
    std::ostringstream msg;
    msg << "structure constant index out of range: c^" << s.k + 1 << "_{" << s.i + 1 << ","
        << s.j + 1 << "} in dimension " << dim;
    fail(ErrorCode::IndexOutOfRange, msg.str());
  }
}

// Dense table with antisymmetry bookkeeping; returns false on a conflict.
template <class T>
bool assemble(int dim, const std::vector<StructureConstant<T>>& constants, std::vector<T>& dense,
              std::vector<char>& seen) {
  dense.assign(std::size_t(dim) * dim * dim, T(0));
  seen.assign(dense.size(), 0);
  bool ok = true;
  for (const auto& s : constants) {
    check_range(dim, s);
    const std::size_t ijk = (std::size_t(s.i) * dim + s.j) * dim + s.k;
    const std::size_t jik = (std::size_t(s.j) * dim + s.i) * dim + s.k;
    if (s.i == s.j) {
      if (s.value != 0) ok = false;
      continue;
    }
    if (seen[ijk] && dense[ijk] != s.value) ok = false;
    if (seen[jik] && dense[jik] != -s.value) ok = false;
    dense[ijk] = s.value;
    dense[jik] = -s.value;
    seen[ijk] = seen[jik] = 1;
  }
  return ok;
}

}  // namespace

template <class T>
LieAlgebra<T> LieAlgebra<T>::from_constants(int dim, const std::vector<StructureConstant<T>>& constants) {
  LieAlgebra alg(dim);
  std::vector<char> seen;
  if (!assemble(dim, constants, alg.dense_, seen))
    throw Error(ErrorCode::ValidationError, "NOT_ANTISYMMETRIC",
                "structure constants violate c^k_ij = -c^k_ji");
  return alg;
}

template <class T>
std::vector<StructureConstant<T>> LieAlgebra<T>::sparse() const {
  std::vector<StructureConstant<T>> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != 0) out.push_back({i, j, k, c(i, j, k)});
  return out;
}

template <class T>
Vector<T> LieAlgebra<T>::bracket(const Vector<T>& x, const Vector<T>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    fail(ErrorCode::DimensionMismatch, "bracket: vector length differs from algebra dimension");
  Vector<T> out(dim_, T(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const T xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const T& ck = c(i, j, k);
        if (ck != 0) out[k] += xy * ck;
      }
    }
  }
  return out;
}

template <class T>
Vector<T> LieAlgebra<T>::bracket_basis(int i, int j) const {
  Vector<T> out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

template <class T>
Matrix<T> LieAlgebra<T>::ad(const Vector<T>& x) const {
  if (static_cast<int>(x.size()) != dim_) fail(ErrorCode::DimensionMismatch, "ad: vector length differs from algebra dimension");
  Matrix<T> m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) m(k, j) += x[i] * c(i, j, k);
  }
  return m;
}

template <class T>
Matrix<T> LieAlgebra<T>::ad_basis(int i) const {
  return ad(unit_vector<T>(dim_, i));
}

template <class T>
LieAlgebra<T> LieAlgebra<T>::change_basis(const Matrix<T>& p) const {
  if (p.rows() != dim_ || p.cols() != dim_) fail(ErrorCode::DimensionMismatch, "change_basis: matrix shape");
  auto pinv = inverse(p);
  if (!pinv) fail(ErrorCode::Degenerate, "change_basis: singular basis change");
  LieAlgebra out(dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b) {
      // [f_a, f_b] in the old basis, then expressed in the new one.
      const Vector<T> v = bracket(p.column(a), p.column(b));
      const Vector<T> w = (*pinv) * v;
      for (int k = 0; k < dim_; ++k) out.set(a, b, k, w[k]);
    }
  out.labels_ = {};
  return out;
}

template <class T>
bool LieAlgebra<T>::is_abelian() const {
  for (const auto& x : dense_)
    if (x != 0) return false;
  return true;
}

namespace {

template <class T>
T jacobi_residual(int dim, const std::vector<T>& c) {
  auto at = [&](int i, int j, int k) -> const T& { return c[(std::size_t(i) * dim + j) * dim + k]; };
  // [[e_i,e_j],e_k] component m = sum_l c^l_ij c^m_lk
  T worst(0);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k)
        for (int m = 0; m < dim; ++m) {
          T s(0);
          for (int l = 0; l < dim; ++l) {
            s += at(i, j, l) * at(l, k, m);
            s += at(j, k, l) * at(l, i, m);
            s += at(k, i, l) * at(l, j, m);
          }
          T a = abs_value(s);
          if (a > worst) worst = a;
        }
  return worst;
}

}  // namespace

template <class T>
LieValidation<T> validate_lie_algebra(int dim, const std::vector<StructureConstant<T>>& constants,
                                      double tol) {
  if (dim < 1) fail(ErrorCode::DimensionMismatch, "Lie algebra dimension must be positive");
  LieValidation<T> out;
  std::vector<T> dense;
  std::vector<char> seen;
  out.antisymmetry_ok = assemble(dim, constants, dense, seen);
  out.jacobi_residual = jacobi_residual(dim, dense);
  out.ok = out.antisymmetry_ok && is_zero(out.jacobi_residual, tol);
  return out;
}

template <class T>
LieValidation<T> validate_lie_algebra(const LieAlgebra<T>& alg, double tol) {
  return validate_lie_algebra(alg.dim(), alg.sparse(), tol);
}

template <class T>
Vector<T> trace_form(const LieAlgebra<T>& alg) {
  Vector<T> tr(alg.dim(), T(0));
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) tr[i] += alg.c(i, j, j);
  return tr;
}

template <class T>
Unimodularity<T> is_unimodular(const LieAlgebra<T>& alg, double tol) {
  Unimodularity<T> out;
  out.traces = trace_form(alg);
  out.unimodular = is_zero_vector(out.traces, tol);
  return out;
}

#define LCAK_INSTANTIATE_LIE(T)                                                               \
  template class LieAlgebra<T>;                                                               \
  template LieValidation<T> validate_lie_algebra(int, const std::vector<StructureConstant<T>>&, \
                                                 double);                                      \
  template LieValidation<T> validate_lie_algebra(const LieAlgebra<T>&, double);               \
  template Unimodularity<T> is_unimodular(const LieAlgebra<T>&, double);                      \
  template Vector<T> trace_form(const LieAlgebra<T>&);

LCAK_INSTANTIATE_LIE(Rational)
LCAK_INSTANTIATE_LIE(double)

}  // namespace lcak
