#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the definitions (permutation sums, the invariant Chevalley-Eilenberg
// formula, eigenvalues from Eigen) and share no code with the library
// beyond the container types.

#include <string>
#include <vector>

#include "lcak/almost_abelian.hpp"

namespace oracle {

using lcak::KForm;
using lcak::LieAlgebra;
using lcak::Matrix;
using lcak::Rational;
using lcak::Vector;

// alpha(e_{i1}, ..., e_{ik}) for arbitrary (possibly repeated, unsorted) indices.
Rational eval_basis(const KForm<Rational>& alpha, const std::vector<int>& idx);

// Full multilinear evaluation on arbitrary vectors.
Rational eval(const KForm<Rational>& alpha, const std::vector<Vector<Rational>>& vs);

// (a ^ b)(X_1..X_{k+l}) = 1/(k! l!) sum_sigma sgn(sigma) a(X_sigma...) b(X_sigma...).
KForm<Rational> wedge(const KForm<Rational>& a, const KForm<Rational>& b);

// d alpha(X_0..X_k) = sum_{i<j} (-1)^{i+j} alpha([X_i, X_j], X_0, ..^i..^j.., X_k).
KForm<Rational> d(const LieAlgebra<Rational>& alg, const KForm<Rational>& alpha);

// max over triples of |[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]|.
Rational jacobi_residual(const LieAlgebra<Rational>& alg);

// 4N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY].
Vector<Rational> nijenhuis(const LieAlgebra<Rational>& alg, const Matrix<Rational>& j, const Vector<Rational>& x,
                           const Vector<Rational>& y);

// theta with dF = theta ^ F, by a linear solve over all 3-form components;
// empty when no exact solution exists.
std::vector<Rational> lee_form(const LieAlgebra<Rational>& alg, const KForm<Rational>& f);

// Isomorphism type of R e_4 + R^3 from the eigenvalues of ad_{e4} (Eigen, double):
// "A4_1" (nilpotent, ad^2 != 0), "A3_4+A1" (0, +-l real), "A3_6+A1" (0, +-il), "h3+R"
// (nilpotent, ad^2 = 0), or "other".
std::string eigen_type(const Matrix<Rational>& ad3);

}  // namespace oracle
