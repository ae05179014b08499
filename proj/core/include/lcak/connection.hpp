#pragma once

// Levi-Civita connection of a left-invariant metric, covariant derivatives,
// the codifferential, curvature with R_{X,Y} = D_{[X,Y]} - [D_X, D_Y], the
// star-Ricci form, the first canonical connection and the forms gamma^t.

#include <vector>

#include "lcak/hermitian.hpp"

namespace lcak {

template <class T>
struct ConnectionTable {
  // gamma[i] is the endomorphism Y -> D_{e_i} Y; its column j is D_{e_i} e_j.
  std::vector<Matrix<T>> gamma;

  int dim() const { return static_cast<int>(gamma.size()); }
  // D_X as an endomorphism.
  Matrix<T> along(const Vector<T>& x) const;
  Vector<T> derivative(const Vector<T>& x, const Vector<T>& y) const { return along(x) * y; }
};

// Koszul formula: 2 g(D_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
template <class T>
ConnectionTable<T> levi_civita(const AlmostHermitianStructure<T>& s);

// Residuals of the defining properties, maximized over basis triples.
template <class T>
T koszul_residual(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c);
template <class T>
T torsion_residual(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c);
template <class T>
T metric_residual(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c);

// D alpha as the 2-tensor (X, Y) -> (D_X alpha)(Y).
template <class T>
Matrix<T> covariant_derivative_one_form(const ConnectionTable<T>& c, const Vector<T>& alpha);

// D_{e_i} phi for a 2-tensor phi.
template <class T>
std::vector<Matrix<T>> covariant_derivative_tensor(const ConnectionTable<T>& c, const Matrix<T>& phi);

// D_{e_i} E for an endomorphism E (for example J).
template <class T>
std::vector<Matrix<T>> covariant_derivative_endomorphism(const ConnectionTable<T>& c,
                                                         const Matrix<T>& e);

// D_{e_i} alpha for a k-form alpha.
template <class T>
std::vector<KForm<T>> covariant_derivative_form(const ConnectionTable<T>& c, const KForm<T>& alpha);

// delta alpha = -sum g^{ab} (D_{e_a} alpha)(e_b).
template <class T>
T codifferential_one_form(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c,
                          const Vector<T>& alpha);

// (delta phi)(Y) = -sum g^{ab} (D_{e_a} phi)(e_b, Y).
template <class T>
Vector<T> codifferential_tensor(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c,
                                const Matrix<T>& phi);

// delta alpha = -sum g^{ab} iota_{e_b} D_{e_a} alpha, the formal adjoint of d.
template <class T>
KForm<T> codifferential_form(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c,
                             const KForm<T>& alpha);

template <class T>
struct Curvature {
  // r[i][j] = R_{e_i, e_j} as an endomorphism.
  std::vector<std::vector<Matrix<T>>> r;

  int dim() const { return static_cast<int>(r.size()); }
  // R(X, Y, Z, W) = g(R_{X,Y} Z, W) on basis vectors.
  T component(const Matrix<T>& g, int x, int y, int z, int w) const;
};

template <class T>
Curvature<T> curvature(const LieAlgebra<T>& alg, const ConnectionTable<T>& c);

template <class T>
struct CurvatureSymmetries {
  T antisymmetry_xy{0};
  T antisymmetry_zw{0};
  T pair_symmetry{0};
  T bianchi{0};
};

template <class T>
CurvatureSymmetries<T> curvature_symmetries(const AlmostHermitianStructure<T>& s,
                                            const Curvature<T>& r);

// tr_g B = sum g^{ab} B(a, b).
template <class T>
T metric_trace(const Matrix<T>& ginv, const Matrix<T>& b);

// rho*(X, Y) = 1/2 sum_i g(R_{X,Y} u_i, J u_i) over a g-orthonormal basis u_i,
// evaluated frame-free as 1/2 tr_g(R_{X,Y}^T g J).
template <class T>
Matrix<T> star_ricci(const AlmostHermitianStructure<T>& s, const Curvature<T>& r);

// The same trace taken over an explicit g-orthonormal J-adapted frame
// {u_1, J u_1, ..., u_n, J u_n} built by Gram-Schmidt. Float only.
Matrix<double> star_ricci_in_frame(const AlmostHermitianStructure<double>& s,
                                   const Curvature<double>& r,
                                   const std::vector<Vector<double>>& seeds);

// Unitary frame grown from the seed vectors (completed by the standard basis).
std::vector<Vector<double>> unitary_frame(const AlmostHermitianStructure<double>& s,
                                          const std::vector<Vector<double>>& seeds);

template <class T>
struct RicciForms {
  Matrix<T> rho_star;
  Matrix<T> gamma0;        // from the curvature of the first canonical connection
  Matrix<T> phi;           // Phi(X, Y) = 1/4 g(J (D_X J), D_Y J)
  Matrix<T> dj_theta;      // d(J theta) for the Lee form theta
  int n = 0;

  // gamma^t = gamma^0 - t (n - 1) / 2 d(J theta).
  Matrix<T> gamma(const T& t) const;
};

// Connection matrices of nabla^0_X = D_X - 1/2 J (D_X J) on basis vectors.
template <class T>
std::vector<Matrix<T>> first_canonical_connection(const AlmostHermitianStructure<T>& s,
                                                  const ConnectionTable<T>& c);

template <class T>
RicciForms<T> canonical_connection_forms(const AlmostHermitianStructure<T>& s,
                                         const ConnectionTable<T>& c, const Curvature<T>& r,
                                         const Vector<T>& theta);

// Everything derived from a structure, computed once.
template <class T>
struct HermitianGeometry {
  AlmostHermitianStructure<T> s;
  LeeData<T> lee;
  ConnectionTable<T> connection;
  std::vector<Matrix<T>> dj;  // D_{e_i} J
  Curvature<T> curv;
  Matrix<T> rho_star;

  int dim() const { return s.dim(); }
  int n() const { return s.n(); }
  // D_X J.
  Matrix<T> dj_along(const Vector<T>& x) const;
};

template <class T>
HermitianGeometry<T> analyze(const AlmostHermitianStructure<T>& s);

}  // namespace lcak
