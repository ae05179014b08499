#include "lcak/hermitian.hpp"

namespace lcak {

template <class T>
StructureValidation<T> validate_structure(const LieAlgebra<T>& alg, const Matrix<T>& j,
                                          const Matrix<T>& g, double tol) {
  StructureValidation<T> v;
  const int n = alg.dim();
  auto mark = [&v](bool& flag, bool value, const char* code) {
    flag = value;
    if (!value && v.failure.empty()) v.failure = code;
  };
  mark(v.dimension_ok,
       n % 2 == 0 && j.rows() == n && j.cols() == n && g.rows() == n && g.cols() == n,
       "DIMENSION_MISMATCH");
  if (!v.dimension_ok) {
    v.ok = false;
    return v;
  }
  const Matrix<T> id = Matrix<T>::identity(n);
  v.j_squared_residual = max_abs(j * j + id);
  mark(v.j_squared_ok, is_zero(v.j_squared_residual, tol), "J_NOT_ACS");
  v.g_symmetry_residual = max_abs(g - g.transpose());
  mark(v.g_symmetric, is_zero(v.g_symmetry_residual, tol), "G_NOT_SYMMETRIC");
  mark(v.g_positive_definite, v.g_symmetric && is_positive_definite(g, tol), "G_NOT_PD");
  v.compatibility_residual = max_abs(j.transpose() * g * j - g);
  mark(v.g_j_invariant, is_zero(v.compatibility_residual, tol), "G_NOT_J_INVARIANT");
  v.ok = v.failure.empty();
  return v;
}

template <class T>
AlmostHermitianStructure<T>::AlmostHermitianStructure(LieAlgebra<T> alg, Matrix<T> j, Matrix<T> g,
                                                      double tol)
    : alg_(std::move(alg)), j_(std::move(j)), g_(std::move(g)), tol_(tol) {
  const auto v = validate_structure(alg_, j_, g_, tol_);
  if (!v.ok) {
    std::string msg = "invalid almost Hermitian structure: " + v.failure;
    if (v.failure == "DIMENSION_MISMATCH") throw Error(ErrorCode::DimensionMismatch, v.failure, msg);
    throw Error(ErrorCode::ValidationError, v.failure, msg);
  }
  auto gi = inverse(g_, tol_);
  if (!gi) throw Error(ErrorCode::DegenerateMetric, "G_NOT_PD", "metric is singular");
  ginv_ = *gi;
  f_matrix_ = j_.transpose() * g_;
  f_ = KForm<T>::from_matrix(f_matrix_);
  T factorial(1);
  for (int i = 2; i <= n(); ++i) factorial *= T(i);
  vol_ = top_coefficient(power(f_, n())) / factorial;
  if (is_zero(vol_, tol_))
    throw Error(ErrorCode::NondegeneracyFailure, "F_DEGENERATE", "fundamental form is degenerate");
}

template <class T>
Vector<T> j_on_one_form(const AlmostHermitianStructure<T>& s, const Vector<T>& alpha) {
  // (J alpha)_j = -sum_i alpha_i J(i, j)
  return -(s.J().transpose() * alpha);
}

template <class T>
Matrix<T> j_on_two_form(const AlmostHermitianStructure<T>& s, const Matrix<T>& psi) {
  return -(s.J().transpose() * psi);
}

template <class T>
Matrix<T> twist_first(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi) {
  return s.J().transpose() * phi;
}

template <class T>
Matrix<T> j_invariant_part(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi) {
  return (phi + s.J().transpose() * phi * s.J()) * frac<T>(1, 2);
}

template <class T>
Matrix<T> j_anti_invariant_part(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi) {
  return (phi - s.J().transpose() * phi * s.J()) * frac<T>(1, 2);
}

template <class T>
Matrix<T> symmetric_part(const Matrix<T>& phi) {
  return (phi + phi.transpose()) * frac<T>(1, 2);
}

template <class T>
TensorSplit<T> split_tensor(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi) {
  TensorSplit<T> out;
  out.j_plus = j_invariant_part(s, phi);
  out.j_minus = j_anti_invariant_part(s, phi);
  out.sym = symmetric_part(phi);
  out.antisym = (phi - phi.transpose()) * frac<T>(1, 2);
  return out;
}

template <class T>
Vector<T> nijenhuis(const AlmostHermitianStructure<T>& s, const Vector<T>& x, const Vector<T>& y) {
  const auto& alg = s.algebra();
  const auto& j = s.J();
  const Vector<T> jx = j * x, jy = j * y;
  Vector<T> out = alg.bracket(jx, jy) - alg.bracket(x, y) - j * alg.bracket(jx, y) - j * alg.bracket(x, jy);
  return frac<T>(1, 4) * out;
}

template <class T>
std::vector<std::vector<Vector<T>>> nijenhuis_table(const AlmostHermitianStructure<T>& s) {
  const int n = s.dim();
  std::vector<std::vector<Vector<T>>> tab(n, std::vector<Vector<T>>(n, Vector<T>(n, T(0))));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      tab[i][j] = nijenhuis(s, unit_vector<T>(n, i), unit_vector<T>(n, j));
      tab[j][i] = -tab[i][j];
    }
  return tab;
}

template <class T>
KForm<T> nijenhuis_form(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  const int n = s.dim();
  const Vector<T> gx = s.flat(x);
  Matrix<T> m(n, n);
  const auto tab = nijenhuis_table(s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = dot(tab[i][j], gx);
  return KForm<T>::from_matrix(m);
}

template <class T>
Matrix<T> nijenhuis_endomorphism(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  const int n = s.dim();
  Matrix<T> m(n, n);
  for (int j = 0; j < n; ++j) m.set_column(j, nijenhuis(s, x, unit_vector<T>(n, j)));
  return m;
}

template <class T>
Matrix<T> nijenhuis_tensor(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  // N(X)(Y, Z) = g(N(X, Y), Z) = (E^T g)(Y, Z) with E = nijenhuis_endomorphism.
  return nijenhuis_endomorphism(s, x).transpose() * s.g();
}

template <class T>
std::vector<Vector<T>> image_of_N(const AlmostHermitianStructure<T>& s) {
  const auto tab = nijenhuis_table(s);
  std::vector<Vector<T>> vecs;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) vecs.push_back(tab[i][j]);
  return span_basis(vecs, s.tolerance());
}

template <class T>
T orthogonality_to_image_of_N(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  const auto tab = nijenhuis_table(s);
  const Vector<T> gx = s.flat(x);
  T worst(0);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      T a = abs_value(dot(tab[i][j], gx));
      if (a > worst) worst = a;
    }
  return worst;
}

template <class T>
LeeData<T> lee_form(const AlmostHermitianStructure<T>& s) {
  const int n = s.dim();
  const auto& alg = s.algebra();
  const KForm<T> dF = d(alg, s.F());
  LeeData<T> out;
  if (n >= 4) {
    const int rows = dF.size();
    Matrix<T> a(rows, n);
    for (int i = 0; i < n; ++i) {
      const KForm<T> col = wedge(KForm<T>::basis(n, {i}), s.F());
      for (int r = 0; r < rows; ++r) a(r, i) = col[r];
    }
    const Matrix<T> w = form_gram(s.g_inverse(), 3);
    out.theta = weighted_least_squares(a, dF.coefficients(), w, s.tolerance());
    const KForm<T> res = dF - wedge(KForm<T>::one_form(out.theta), s.F());
    out.residual = res.max_abs();
    out.exact_solution = is_zero(out.residual, s.tolerance());
  } else {
    out.theta = Vector<T>(n, T(0));
  }
  out.T_field = s.sharp(out.theta);
  out.j_theta = j_on_one_form(s, out.theta);
  out.JT = s.J() * out.T_field;
  out.eta = -contract(out.T_field, s.F()).to_vector();
  auto v = solve(s.F_matrix().transpose(), out.theta, s.tolerance());
  if (!v) fail(ErrorCode::NondegeneracyFailure, "iota_V F = theta has no solution");
  out.V = *v;
  out.norm2 = dot(out.theta, out.T_field);
  return out;
}

template <class T>
Matrix<T> lie_derivative_J(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  const Matrix<T> ad = s.algebra().ad(x);
  return ad * s.J() - s.J() * ad;
}

template <class T>
KForm<T> lie_derivative_F(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  const Matrix<T> ad = s.algebra().ad(x);
  return KForm<T>::from_matrix(-(ad.transpose() * s.F_matrix()) - s.F_matrix() * ad);
}

template <class T>
T j_invariance_defect(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi) {
  return max_abs(s.J().transpose() * phi * s.J() - phi);
}

#define LCAK_INSTANTIATE_HERMITIAN(T)                                                              \
  template class AlmostHermitianStructure<T>;                                                      \
  template StructureValidation<T> validate_structure(const LieAlgebra<T>&, const Matrix<T>&,       \
                                                     const Matrix<T>&, double);                    \
  template Vector<T> j_on_one_form(const AlmostHermitianStructure<T>&, const Vector<T>&);          \
  template Matrix<T> j_on_two_form(const AlmostHermitianStructure<T>&, const Matrix<T>&);          \
  template Matrix<T> twist_first(const AlmostHermitianStructure<T>&, const Matrix<T>&);            \
  template Matrix<T> j_invariant_part(const AlmostHermitianStructure<T>&, const Matrix<T>&);       \
  template Matrix<T> j_anti_invariant_part(const AlmostHermitianStructure<T>&, const Matrix<T>&);  \
  template Matrix<T> symmetric_part(const Matrix<T>&);                                             \
  template TensorSplit<T> split_tensor(const AlmostHermitianStructure<T>&, const Matrix<T>&);      \
  template Vector<T> nijenhuis(const AlmostHermitianStructure<T>&, const Vector<T>&,               \
                               const Vector<T>&);                                                  \
  template std::vector<std::vector<Vector<T>>> nijenhuis_table(const AlmostHermitianStructure<T>&); \
  template KForm<T> nijenhuis_form(const AlmostHermitianStructure<T>&, const Vector<T>&);          \
  template Matrix<T> nijenhuis_tensor(const AlmostHermitianStructure<T>&, const Vector<T>&);       \
  template Matrix<T> nijenhuis_endomorphism(const AlmostHermitianStructure<T>&, const Vector<T>&); \
  template std::vector<Vector<T>> image_of_N(const AlmostHermitianStructure<T>&);                  \
  template T orthogonality_to_image_of_N(const AlmostHermitianStructure<T>&, const Vector<T>&);    \
  template LeeData<T> lee_form(const AlmostHermitianStructure<T>&);                                \
  template Matrix<T> lie_derivative_J(const AlmostHermitianStructure<T>&, const Vector<T>&);       \
  template KForm<T> lie_derivative_F(const AlmostHermitianStructure<T>&, const Vector<T>&);        \
  template T j_invariance_defect(const AlmostHermitianStructure<T>&, const Matrix<T>&);

LCAK_INSTANTIATE_HERMITIAN(Rational)
LCAK_INSTANTIATE_HERMITIAN(double)

}  // namespace lcak
