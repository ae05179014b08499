#pragma once

// Left-invariant exterior forms on a Lie algebra.
//
// A k-form is stored by its coefficients on strictly increasing multi-indices
// e^{i1...ik}, ordered lexicographically. Multi-indices are handled as bit
// masks internally. Evaluation uses the determinant convention, so
// e^{12}(e_1, e_2) = 1 and e^1 ^ e^2 = e^{12}.

#include <cstdint>
#include <vector>

#include "lcak/lie_algebra.hpp"

namespace lcak {

inline constexpr int kMaxFormDimension = 16;

using IndexMask = std::uint32_t;

// Sorted multi-indices of each degree for one ambient dimension.
struct MultiIndexTable {
  int dim = 0;
  std::vector<std::vector<IndexMask>> masks;  // masks[k][pos]
  std::vector<int> position;                  // position[mask] within its degree

  int count(int k) const { return static_cast<int>(masks[k].size()); }
};

const MultiIndexTable& multi_indices(int dim);

std::vector<int> mask_indices(IndexMask mask);
IndexMask indices_mask(const std::vector<int>& indices);

template <class T>
class KForm {
 public:
  KForm() = default;
  KForm(int dim, int degree);

  static KForm zero(int dim, int degree) { return KForm(dim, degree); }
  static KForm scalar(int dim, const T& value);
  // e^{i1} ^ ... ^ e^{ik}; indices may be unsorted (the sign is applied) and
  // a repeated index gives the zero form.
  static KForm basis(int dim, const std::vector<int>& indices);
  static KForm one_form(const Vector<T>& coefficients);
  // Antisymmetric matrix m with m(i,j) = phi(e_i, e_j). The antisymmetric part
  // of a general matrix is taken.
  static KForm from_matrix(const Matrix<T>& m);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  T& operator[](int pos) { return coeffs_[pos]; }
  const T& operator[](int pos) const { return coeffs_[pos]; }
  IndexMask mask(int pos) const { return multi_indices(dim_).masks[degree_][pos]; }

  // Coefficient on a sorted multi-index.
  T coefficient(const std::vector<int>& sorted_indices) const;
  T coefficient_mask(IndexMask mask) const;
  void add_to(IndexMask mask, const T& value);

  // 1-forms: coefficient vector; 2-forms: antisymmetric matrix.
  Vector<T> to_vector() const;
  Matrix<T> to_matrix() const;

  T evaluate(const std::vector<Vector<T>>& vectors) const;

  bool is_zero(double tol = kDefaultTolerance) const;
  T max_abs() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const T& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= T(-1); }
  friend KForm operator*(const T& s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, const T& s) { return a *= s; }
  bool operator==(const KForm& o) const = default;

  const std::vector<T>& coefficients() const { return coeffs_; }

  template <class U>
  KForm<U> cast() const {
    KForm<U> out(dim_, degree_);
    for (int p = 0; p < size(); ++p) out[p] = scalar_cast<U>(coeffs_[p]);
    return out;
  }

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::vector<T> coeffs_;
};

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b);

// iota_X alpha.
template <class T>
KForm<T> contract(const Vector<T>& x, const KForm<T>& alpha);

// Chevalley-Eilenberg differential: for a 1-form, d alpha(X, Y) = -alpha([X, Y]).
template <class T>
KForm<T> d(const LieAlgebra<T>& alg, const KForm<T>& alpha);

// (M . alpha)(Y1..Yk) = sum_i alpha(Y1, .., M Yi, .., Yk).
template <class T>
KForm<T> derivation_action(const Matrix<T>& m, const KForm<T>& alpha);

// L_X alpha through Cartan's formula iota_X d alpha + d iota_X alpha.
template <class T>
KForm<T> lie_derivative(const LieAlgebra<T>& alg, const Vector<T>& x, const KForm<T>& alpha);

// L_X alpha from the definition on invariant forms: -(ad_X . alpha).
template <class T>
KForm<T> lie_derivative_direct(const LieAlgebra<T>& alg, const Vector<T>& x, const KForm<T>& alpha);

// Gram matrix of the metric induced by g on k-forms, in multi-index order:
// <e^I, e^J> = det(ginv[I, J]). e^{12} has unit norm for g = identity.
template <class T>
Matrix<T> form_gram(const Matrix<T>& ginv, int degree);

template <class T>
T form_inner_product(const KForm<T>& a, const KForm<T>& b, const Matrix<T>& ginv);

template <class T>
T form_norm2(const KForm<T>& a, const Matrix<T>& ginv) {
  return form_inner_product(a, a, ginv);
}

// Coefficient of a top-degree form on e^{1...dim}.
template <class T>
T top_coefficient(const KForm<T>& top);

// alpha^m.
template <class T>
KForm<T> power(const KForm<T>& alpha, int m);

// Hodge star with respect to g and the volume form vol_coef * e^{1...dim}.
// Satisfies beta ^ *alpha = <beta, alpha> vol.
template <class T>
KForm<T> hodge_star(const KForm<T>& alpha, const Matrix<T>& ginv, const T& vol_coef);

extern template class KForm<Rational>;
extern template class KForm<double>;

}  // namespace lcak
