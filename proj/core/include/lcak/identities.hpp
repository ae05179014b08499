#pragma once

// Pointwise tensor identities of almost Hermitian Lie algebras, each returned
// as a residual together with the size of the terms involved. These are shared
// by the unit tests, the fuzz driver and the acceptance suite.

#include <string>
#include <vector>

#include "lcak/connection.hpp"

namespace lcak {

template <class T>
struct IdentityResidual {
  std::string name;
  T residual{0};  // max-norm of (left side - right side)
  T scale{0};     // max-norm over the individual terms
  bool applicable = true;

  // Exact: residual == 0. Float: residual <= tol * max(1, scale).
  bool holds(double tol) const;
  double relative() const;
};

// d(J theta) = 2 (D theta)^{sym,J,+}_{J.,.} + J (d theta)^{J,-} + 2 N_{JT}
//              + theta ^ J theta - |theta|^2 F.
template <class T>
IdentityResidual<T> formula_almost_hermitian(const HermitianGeometry<T>& geo);

// D_X F = 1/2 (X^b ^ J theta + (JX)^b ^ theta) + 2 N_{JX} for every basis X.
template <class T>
IdentityResidual<T> dj_expression(const HermitianGeometry<T>& geo);

// gamma^0 computed from the curvature of nabla^0 against rho* + Phi.
template <class T>
IdentityResidual<T> chern_form(const HermitianGeometry<T>& geo);

// (delta (D alpha)^{J,+} - delta (D alpha)^{J,-})(X)
//   = rho*(alpha^#, JX) - (n-1) D alpha(JT, JX) - sum_i D alpha(J e_i, (D_{e_i} J) X).
template <class T>
IdentityResidual<T> bochner_formula(const HermitianGeometry<T>& geo, const Vector<T>& alpha);

// phi ^ psi ^ F^{n-2} = (<phi,F><psi,F> - <phi,psi>) F^n / (n(n-1)) for J-invariant phi.
template <class T>
IdentityResidual<T> j_invariant_wedge(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi,
                                      const Matrix<T>& psi);

// g(N(X,Y),Z) + g(N(Y,Z),X) + g(N(Z,X),Y) = 0 over basis triples.
template <class T>
IdentityResidual<T> cyclic_nijenhuis(const AlmostHermitianStructure<T>& s);

// L_{JT} J - J L_T J = 4 N(T, .) as endomorphisms.
template <class T>
IdentityResidual<T> lie_derivative_nijenhuis(const HermitianGeometry<T>& geo);

// The Lee form solving dF = theta ^ F against J delta F / (n - 1).
template <class T>
IdentityResidual<T> lee_normalization(const HermitianGeometry<T>& geo);

// Dimension 4: the two brackets of d(J theta) are self-dual and anti-self-dual
// for the orientation of F^2 / 2 and sum to d(J theta).
template <class T>
IdentityResidual<T> dj_theta_duality_dim4(const HermitianGeometry<T>& geo);

template <class T>
struct Dim4Integrand {
  T delta_theta{0};
  T norm2_theta{0};
  T nijenhuis_term{0};  // |2 N_{JT} + J (d theta)^{J,-}|^2
  T hessian_term{0};    // |(D theta)^{sym,J,+}_{J.,.}|^2
  T bracket_term{0};    // g([T, JT], JT)
  T value{0};           // (delta theta)^2 - 2|theta|^2 delta theta + nijenhuis - 4 hessian + 2 bracket
};

template <class T>
Dim4Integrand<T> dim4_integrand(const HermitianGeometry<T>& geo);

// Cartan's formula against the direct derivation action for X = e_i and the
// given form.
template <class T>
IdentityResidual<T> cartan_formula(const LieAlgebra<T>& alg, const KForm<T>& alpha);

// delta alpha = 0 for every invariant 1-form on a unimodular algebra.
template <class T>
IdentityResidual<T> unimodular_codifferential(const HermitianGeometry<T>& geo);

}  // namespace lcak
