#pragma once

// Real Lie algebras given by structure constants [e_i, e_j] = sum_k c^k_ij e_k.
// Indices are 0-based in the API; spec files and reports use 1-based labels.

#include <string>
#include <vector>

#include "lcak/linalg.hpp"

namespace lcak {

template <class T>
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  T value{0};
};

template <class T>
struct LieValidation {
  bool antisymmetry_ok = true;
  T jacobi_residual{0};  // max-norm of the cyclic Jacobi sum over all triples
  bool ok = true;
};

template <class T>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim);

  // Accepts constants for any ordered pair (i, j). Pairs given in both orders
  // must be antisymmetric; throws ValidationError(NOT_ANTISYMMETRIC) otherwise
  // and IndexOutOfRange for indices outside [0, dim). Jacobi is not enforced
  // here; use validate_lie_algebra.
  static LieAlgebra from_constants(int dim, const std::vector<StructureConstant<T>>& constants);

  int dim() const { return dim_; }

  // c^k_ij.
  const T& c(int i, int j, int k) const { return dense_[index(i, j, k)]; }

  // Nonzero constants with i < j.
  std::vector<StructureConstant<T>> sparse() const;

  Vector<T> bracket(const Vector<T>& x, const Vector<T>& y) const;
  Vector<T> bracket_basis(int i, int j) const;

  // ad(x) y = [x, y]; column j is [x, e_j].
  Matrix<T> ad(const Vector<T>& x) const;
  Matrix<T> ad_basis(int i) const;

  // Structure constants in the basis f_a = sum_i p(i, a) e_i.
  LieAlgebra change_basis(const Matrix<T>& p) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  bool is_abelian() const;

  template <class U>
  LieAlgebra<U> cast() const {
    std::vector<StructureConstant<U>> out;
    for (const auto& s : sparse()) out.push_back({s.i, s.j, s.k, scalar_cast<U>(s.value)});
    auto alg = LieAlgebra<U>::from_constants(dim_, out);
    alg.set_labels(labels_);
    return alg;
  }

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && dense_ == o.dense_; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (std::size_t(i) * dim_ + j) * dim_ + k;
  }
  void set(int i, int j, int k, const T& value);

  int dim_ = 0;
  std::vector<T> dense_;
  std::vector<std::string> labels_;
};

// Validates raw constants (which may mention a pair in both orders).
template <class T>
LieValidation<T> validate_lie_algebra(int dim, const std::vector<StructureConstant<T>>& constants,
                                      double tol = kDefaultTolerance);

template <class T>
LieValidation<T> validate_lie_algebra(const LieAlgebra<T>& alg, double tol = kDefaultTolerance);

template <class T>
struct Unimodularity {
  bool unimodular = true;
  Vector<T> traces;  // tr ad(e_i)
};

template <class T>
Unimodularity<T> is_unimodular(const LieAlgebra<T>& alg, double tol = kDefaultTolerance);

// The linear form x -> tr ad(x).
template <class T>
Vector<T> trace_form(const LieAlgebra<T>& alg);

extern template class LieAlgebra<Rational>;
extern template class LieAlgebra<double>;

}  // namespace lcak
