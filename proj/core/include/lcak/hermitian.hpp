#pragma once

// Almost Hermitian structures (J, g) on a Lie algebra and the tensors built
// from them without a connection: F, J acting on forms, the J-type and
// symmetry splittings of 2-tensors, the Nijenhuis tensor, the Lee form and
// Lie derivatives of J and F.
//
// Matrix conventions: column j of J is J e_j; a bilinear form phi is the
// matrix phi(e_i, e_j); g is the Gram matrix. Then F(X, Y) = g(JX, Y) is the
// matrix J^T g.

#include <string>
#include <vector>

#include "lcak/exterior.hpp"

namespace lcak {

template <class T>
struct StructureValidation {
  bool dimension_ok = true;        // square, matching, even dimension
  bool j_squared_ok = true;        // J^2 = -1
  bool g_symmetric = true;
  bool g_positive_definite = true;
  bool g_j_invariant = true;       // g(JX, JY) = g(X, Y)
  T j_squared_residual{0};
  T g_symmetry_residual{0};
  T compatibility_residual{0};
  bool ok = true;
  std::string failure;             // first failing check: J_NOT_ACS, G_NOT_SYMMETRIC, ...
};

template <class T>
StructureValidation<T> validate_structure(const LieAlgebra<T>& alg, const Matrix<T>& j,
                                          const Matrix<T>& g, double tol = kDefaultTolerance);

template <class T>
class AlmostHermitianStructure {
 public:
  AlmostHermitianStructure() = default;
  // Throws ValidationError with reason set to the first failing check.
  AlmostHermitianStructure(LieAlgebra<T> alg, Matrix<T> j, Matrix<T> g,
                           double tol = kDefaultTolerance);

  const LieAlgebra<T>& algebra() const { return alg_; }
  const Matrix<T>& J() const { return j_; }
  const Matrix<T>& g() const { return g_; }
  const Matrix<T>& g_inverse() const { return ginv_; }
  const Matrix<T>& F_matrix() const { return f_matrix_; }
  const KForm<T>& F() const { return f_; }
  int dim() const { return alg_.dim(); }
  int n() const { return alg_.dim() / 2; }
  double tolerance() const { return tol_; }

  // Coefficient of F^n / n! on e^{1...2n}; fixes the orientation.
  const T& volume_coefficient() const { return vol_; }

  T inner(const Vector<T>& x, const Vector<T>& y) const { return bilinear(x, g_, y); }
  // g(x, .) as a 1-form.
  Vector<T> flat(const Vector<T>& x) const { return g_ * x; }
  Vector<T> sharp(const Vector<T>& alpha) const { return ginv_ * alpha; }
  Vector<T> apply_J(const Vector<T>& x) const { return j_ * x; }

  template <class U>
  AlmostHermitianStructure<U> cast() const {
    return AlmostHermitianStructure<U>(alg_.template cast<U>(), matrix_cast<U>(j_),
                                       matrix_cast<U>(g_), tol_);
  }

 private:
  LieAlgebra<T> alg_;
  Matrix<T> j_;
  Matrix<T> g_;
  Matrix<T> ginv_;
  Matrix<T> f_matrix_;
  KForm<T> f_;
  T vol_{0};
  double tol_ = kDefaultTolerance;
};

// (J alpha)(X) = -alpha(JX).
template <class T>
Vector<T> j_on_one_form(const AlmostHermitianStructure<T>& s, const Vector<T>& alpha);

// (J psi)(X, Y) = -psi(JX, Y), i.e. the matrix -J^T psi. A 2-form when psi is
// J-anti-invariant.
template <class T>
Matrix<T> j_on_two_form(const AlmostHermitianStructure<T>& s, const Matrix<T>& psi);

// phi_{J.,.}(X, Y) = phi(JX, Y), i.e. J^T phi.
template <class T>
Matrix<T> twist_first(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi);

template <class T>
struct TensorSplit {
  Matrix<T> j_plus;   // (phi(X,Y) + phi(JX,JY)) / 2
  Matrix<T> j_minus;  // (phi(X,Y) - phi(JX,JY)) / 2
  Matrix<T> sym;
  Matrix<T> antisym;
};

template <class T>
TensorSplit<T> split_tensor(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi);

template <class T>
Matrix<T> j_invariant_part(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi);
template <class T>
Matrix<T> j_anti_invariant_part(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi);

template <class T>
Matrix<T> symmetric_part(const Matrix<T>& phi);

// N(X, Y) with 4N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY].
template <class T>
Vector<T> nijenhuis(const AlmostHermitianStructure<T>& s, const Vector<T>& x, const Vector<T>& y);

// All N(e_i, e_j); entry [i][j].
template <class T>
std::vector<std::vector<Vector<T>>> nijenhuis_table(const AlmostHermitianStructure<T>& s);

// N_X = g(N(., .), X) as a 2-form.
template <class T>
KForm<T> nijenhuis_form(const AlmostHermitianStructure<T>& s, const Vector<T>& x);

// N(X) = g(N(X, .), .) as a 2-tensor.
template <class T>
Matrix<T> nijenhuis_tensor(const AlmostHermitianStructure<T>& s, const Vector<T>& x);

// The endomorphism Y -> N(X, Y).
template <class T>
Matrix<T> nijenhuis_endomorphism(const AlmostHermitianStructure<T>& s, const Vector<T>& x);

// Row-reduced basis of Span{N(e_i, e_j)}.
template <class T>
std::vector<Vector<T>> image_of_N(const AlmostHermitianStructure<T>& s);

// max_{i,j} |g(N(e_i, e_j), x)|.
template <class T>
T orthogonality_to_image_of_N(const AlmostHermitianStructure<T>& s, const Vector<T>& x);

template <class T>
struct LeeData {
  Vector<T> theta;      // Lee form
  Vector<T> T_field;    // theta^sharp
  Vector<T> j_theta;    // J theta
  Vector<T> JT;         // J T
  Vector<T> eta;        // -iota_T F, equal to -J theta
  Vector<T> V;          // iota_V F = theta
  T norm2{0};           // |theta|^2 = theta(T)
  T residual{0};        // max |dF - theta ^ F|
  bool exact_solution = true;  // dF = theta ^ F holds
};

// Solves dF = theta ^ F in the least-squares sense for the metric induced by
// g on 3-forms. This is the Lee form of the Lefschetz decomposition of dF.
template <class T>
LeeData<T> lee_form(const AlmostHermitianStructure<T>& s);

// L_X J = ad_X J - J ad_X, i.e. (L_X J)(Y) = [X, JY] - J[X, Y].
template <class T>
Matrix<T> lie_derivative_J(const AlmostHermitianStructure<T>& s, const Vector<T>& x);

// (L_X F)(Y, Z) = -F([X,Y], Z) - F(Y, [X,Z]).
template <class T>
KForm<T> lie_derivative_F(const AlmostHermitianStructure<T>& s, const Vector<T>& x);

// max |phi(JX, JY) - phi(X, Y)| over basis pairs.
template <class T>
T j_invariance_defect(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi);

extern template class AlmostHermitianStructure<Rational>;
extern template class AlmostHermitianStructure<double>;

}  // namespace lcak
