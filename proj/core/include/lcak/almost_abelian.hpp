#pragma once

// Almost abelian Lie algebras g = R e_{2n} + n with n = Span(e_1, ..., e_{2n-1})
// abelian, in an adapted unitary basis: g = identity, J e_i = e_{2n-i+1}.
// The algebra is encoded by ad_{e_{2n}} restricted to n,
//
//   [ a  b ]
//   [ v  A ]
//
// acting on (e_1 | e_2, ..., e_{2n-1}); n_1 = Span(e_2, ..., e_{2n-1}).

#include <string>

#include "lcak/conditions.hpp"

namespace lcak {

template <class T>
struct AlmostAbelianParams {
  int n = 2;
  T a{0};
  Vector<T> b;  // size 2n - 2
  Vector<T> v;  // size 2n - 2
  Matrix<T> A;  // (2n - 2) x (2n - 2)

  static AlmostAbelianParams zero(int n);

  template <class U>
  AlmostAbelianParams<U> cast() const {
    return {n, scalar_cast<U>(a), vector_cast<U>(b), vector_cast<U>(v), matrix_cast<U>(A)};
  }
};

// ad_{e_{2n}} on n as a (2n-1) x (2n-1) matrix. Throws DimensionMismatch.
template <class T>
Matrix<T> ad_block(const AlmostAbelianParams<T>& p);

template <class T>
LieAlgebra<T> almost_abelian_algebra(const AlmostAbelianParams<T>& p);

// Throws DimensionMismatch (sizes) and UnsupportedDimension (n < 2).
template <class T>
AlmostHermitianStructure<T> build_almost_abelian(const AlmostAbelianParams<T>& p,
                                                 double tol = kDefaultTolerance);

// Adapted J: column i is J e_i.
template <class T>
Matrix<T> almost_abelian_J(int n);

// ((Jv)^b - tr(A) e^{2n}) / (n - 1), the closed form of the Lee form.
template <class T>
Vector<T> lee_form_aa(const AlmostAbelianParams<T>& p);

template <class T>
bool is_unimodular_aa(const AlmostAbelianParams<T>& p, double tol = kDefaultTolerance);

template <class T>
struct AaConditionResiduals {
  Vector<T> dtheta;             // A21 v1 - A11 v2, A22 v1 - A12 v2
  Vector<T> orthogonality;      // A11 v1 + A21 v2 + a b1, A12 v1 + A22 v2 + a b2
  Vector<T> j_anti_invariance;  // a, A22 v1 - A21 v2, A12 v1 - A11 v2

  T dtheta_max() const { return max_abs(dtheta); }
  T orthogonality_max() const { return max_abs(orthogonality); }
  T j_anti_invariance_max() const { return max_abs(j_anti_invariance); }
  bool all_vanish(double tol) const;
};

// Dimension 4 only; throws UnsupportedDimension otherwise.
template <class T>
AaConditionResiduals<T> pluricanonical_conditions_aa(const AlmostAbelianParams<T>& p);

enum class ClassKind { A_4_1, A_3_4_plus_A1, A_3_6_plus_A1, Abelian, Other };
const char* to_string(ClassKind kind);

struct ClassLabel {
  ClassKind kind = ClassKind::Other;
  int dim = 4;
  int nilpotency_index = 0;    // 0 when ad_{e4}|n is not nilpotent
  std::string eigen_signature; // "z<zeros>p<positive>m<negative>c<complex pairs>"
  bool unimodular = true;

  std::string str() const;
  bool operator==(const ClassLabel& o) const = default;
};

// Isomorphism type of R e_4 + R^3 with the given ad_{e4}|n, from the
// characteristic polynomial and the ranks of the powers of m.
template <class T>
ClassLabel jordan_type(const Matrix<T>& m, double tol = kDefaultTolerance);

template <class T>
struct Classification {
  ClassLabel label;   // from the sign of b.v
  ClassLabel jordan;  // independent cross-check
  T b_dot_v{0};
  bool agree() const { return label == jordan; }
};

// Throws UnsupportedDimension (n != 2), PreconditionFailed (the condition
// systems do not vanish, not unimodular, or v = 0 with b != 0) and Degenerate
// (b = v = 0).
template <class T>
Classification<T> classify_4d(const AlmostAbelianParams<T>& p, double tol = kDefaultTolerance);

}  // namespace lcak
