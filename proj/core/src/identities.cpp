#include "lcak/identities.hpp"

#include <algorithm>
#include <cmath>

namespace lcak {

template <class T>
bool IdentityResidual<T>::holds(double tol) const {
  if constexpr (ScalarTraits<T>::exact) {
    return residual == 0;
  } else {
    return residual <= tol * std::max(1.0, scale);
  }
}

template <class T>
double IdentityResidual<T>::relative() const {
  return to_double(residual) / std::max(1.0, to_double(scale));
}

namespace {

template <class T>
T max_of(std::initializer_list<T> xs) {
  T m(0);
  for (const auto& x : xs)
    if (x > m) m = x;
  return m;
}

template <class T>
void bump(T& worst, const T& v) {
  if (v > worst) worst = v;
}

template <class T>
Matrix<T> wedge11(const Vector<T>& a, const Vector<T>& b) {
  return wedge(KForm<T>::one_form(a), KForm<T>::one_form(b)).to_matrix();
}

template <class T>
Matrix<T> nijenhuis_form_matrix(const AlmostHermitianStructure<T>& s, const Vector<T>& x) {
  return nijenhuis_form(s, x).to_matrix();
}

}  // namespace

template <class T>
IdentityResidual<T> formula_almost_hermitian(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  const auto& lee = geo.lee;
  const Matrix<T> dtheta_cov = covariant_derivative_one_form(geo.connection, lee.theta);
  const Matrix<T> hess = j_invariant_part(s, symmetric_part(dtheta_cov));
  const Matrix<T> t1 = T(2) * twist_first(s, hess);
  const Matrix<T> dtheta = d(s.algebra(), KForm<T>::one_form(lee.theta)).to_matrix();
  const Matrix<T> t2 = j_on_two_form(s, j_anti_invariant_part(s, dtheta));
  const Matrix<T> t3 = T(2) * nijenhuis_form_matrix(s, lee.JT);
  const Matrix<T> t4 = wedge11(lee.theta, lee.j_theta);
  const Matrix<T> t5 = -(s.F_matrix() * lee.norm2);
  const Matrix<T> lhs = d(s.algebra(), KForm<T>::one_form(lee.j_theta)).to_matrix();
  IdentityResidual<T> out;
  out.name = "formula_almost_hermitian";
  out.residual = max_abs(lhs - (t1 + t2 + t3 + t4 + t5));
  out.scale = max_of({max_abs(lhs), max_abs(t1), max_abs(t2), max_abs(t3), max_abs(t4), max_abs(t5)});
  return out;
}

template <class T>
IdentityResidual<T> dj_expression(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  const auto& lee = geo.lee;
  const int n = s.dim();
  const auto dF = covariant_derivative_tensor(geo.connection, s.F_matrix());
  IdentityResidual<T> out;
  out.name = "dj_expression";
  for (int i = 0; i < n; ++i) {
    const Vector<T> x = unit_vector<T>(n, i);
    const Matrix<T> a = (wedge11(s.flat(x), lee.j_theta) + wedge11(s.flat(s.J() * x), lee.theta)) * frac<T>(1, 2);
    const Matrix<T> b = T(2) * nijenhuis_form_matrix(s, s.J() * x);
    bump(out.residual, max_abs(dF[i] - a - b));
    bump(out.scale, max_of({max_abs(dF[i]), max_abs(a), max_abs(b)}));
  }
  return out;
}

template <class T>
IdentityResidual<T> chern_form(const HermitianGeometry<T>& geo) {
  const auto forms = canonical_connection_forms(geo.s, geo.connection, geo.curv, geo.lee.theta);
  IdentityResidual<T> out;
  out.name = "chern_form";
  out.residual = max_abs(forms.gamma0 - (forms.rho_star + forms.phi));
  out.scale = max_of({max_abs(forms.gamma0), max_abs(forms.rho_star), max_abs(forms.phi)});
  return out;
}

template <class T>
IdentityResidual<T> bochner_formula(const HermitianGeometry<T>& geo, const Vector<T>& alpha) {
  const auto& s = geo.s;
  const int dim = s.dim();
  const int n = s.n();
  const Matrix<T> da = covariant_derivative_one_form(geo.connection, alpha);
  const Vector<T> lhs = codifferential_tensor(s, geo.connection, j_invariant_part(s, da)) -
                        codifferential_tensor(s, geo.connection, j_anti_invariant_part(s, da));
  const Vector<T> a_sharp = s.sharp(alpha);
  const Vector<T> jt = geo.lee.JT;
  const Matrix<T>& gi = s.g_inverse();
  IdentityResidual<T> out;
  out.name = "bochner_formula";
  T rhs_scale(0);
  for (int x = 0; x < dim; ++x) {
    const Vector<T> ex = unit_vector<T>(dim, x);
    const Vector<T> jx = s.J() * ex;
    const T t1 = bilinear(a_sharp, geo.rho_star, jx);
    const T t2 = T(n - 1) * bilinear(jt, da, jx);
    T t3(0);
    for (int a = 0; a < dim; ++a) {
      const Vector<T> jea = s.J().column(a);
      for (int b = 0; b < dim; ++b) {
        if (gi(a, b) == 0) continue;
        t3 += gi(a, b) * bilinear(jea, da, geo.dj[b] * ex);
      }
    }
    const T rhs = t1 - t2 - t3;
    bump(out.residual, abs_value(T(lhs[x] - rhs)));
    bump(rhs_scale, max_of({abs_value(t1), abs_value(t2), abs_value(t3), abs_value(lhs[x])}));
  }
  out.scale = rhs_scale;
  return out;
}

template <class T>
IdentityResidual<T> j_invariant_wedge(const AlmostHermitianStructure<T>& s, const Matrix<T>& phi_m,
                                      const Matrix<T>& psi_m) {
  const int n = s.n();
  const KForm<T> phi = KForm<T>::from_matrix(phi_m);
  const KForm<T> psi = KForm<T>::from_matrix(psi_m);
  const KForm<T>& f = s.F();
  const Matrix<T>& gi = s.g_inverse();
  const T lhs = top_coefficient(wedge(wedge(phi, psi), power(f, n - 2)));
  const T coef = (form_inner_product(phi, f, gi) * form_inner_product(psi, f, gi) -
                  form_inner_product(phi, psi, gi)) /
                 T(n * (n - 1));
  const T rhs = coef * top_coefficient(power(f, n));
  IdentityResidual<T> out;
  out.name = "j_invariant_wedge";
  out.applicable = n >= 2;
  out.residual = abs_value(T(lhs - rhs));
  out.scale = max_of({abs_value(lhs), abs_value(rhs)});
  return out;
}

template <class T>
IdentityResidual<T> cyclic_nijenhuis(const AlmostHermitianStructure<T>& s) {
  const int n = s.dim();
  const auto tab = nijenhuis_table(s);
  IdentityResidual<T> out;
  out.name = "cyclic_nijenhuis";
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        const T a = s.inner(tab[x][y], unit_vector<T>(n, z));
        const T b = s.inner(tab[y][z], unit_vector<T>(n, x));
        const T c = s.inner(tab[z][x], unit_vector<T>(n, y));
        bump(out.residual, abs_value(T(a + b + c)));
        bump(out.scale, max_of({abs_value(a), abs_value(b), abs_value(c)}));
      }
  return out;
}

template <class T>
IdentityResidual<T> lie_derivative_nijenhuis(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  const Matrix<T> l_jt = lie_derivative_J(s, geo.lee.JT);
  const Matrix<T> j_l_t = s.J() * lie_derivative_J(s, geo.lee.T_field);
  const Matrix<T> four_n = T(4) * nijenhuis_endomorphism(s, geo.lee.T_field);
  IdentityResidual<T> out;
  out.name = "lie_derivative_nijenhuis";
  out.residual = max_abs(l_jt - j_l_t - four_n);
  out.scale = max_of({max_abs(l_jt), max_abs(j_l_t), max_abs(four_n)});
  return out;
}

template <class T>
IdentityResidual<T> lee_normalization(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  IdentityResidual<T> out;
  out.name = "lee_normalization";
  out.applicable = s.n() >= 2;
  if (!out.applicable) return out;
  const Vector<T> delta_f = codifferential_form(s, geo.connection, s.F()).to_vector();
  const Vector<T> candidate = (T(1) / T(s.n() - 1)) * j_on_one_form(s, delta_f);
  out.residual = max_abs(candidate - geo.lee.theta);
  out.scale = max_of({max_abs(candidate), max_abs(geo.lee.theta)});
  return out;
}

namespace {

template <class T>
struct Dim4Pieces {
  Matrix<T> self_dual;
  Matrix<T> anti_self_dual;
  T delta_theta{0};
};

template <class T>
Dim4Pieces<T> dim4_pieces(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  const auto& lee = geo.lee;
  Dim4Pieces<T> p;
  p.delta_theta = codifferential_one_form(s, geo.connection, lee.theta);
  const Matrix<T> dtheta = d(s.algebra(), KForm<T>::one_form(lee.theta)).to_matrix();
  const Matrix<T> hess = j_invariant_part(s, symmetric_part(covariant_derivative_one_form(geo.connection, lee.theta)));
  const Matrix<T> half_f = s.F_matrix() * frac<T>(1, 2);
  p.self_dual = -(half_f * (p.delta_theta + lee.norm2)) + T(2) * nijenhuis_form_matrix(s, lee.JT) +
                j_on_two_form(s, j_anti_invariant_part(s, dtheta));
  p.anti_self_dual = T(2) * twist_first(s, hess) + wedge11(lee.theta, lee.j_theta) +
                     half_f * (p.delta_theta - lee.norm2);
  return p;
}

}  // namespace

template <class T>
IdentityResidual<T> dj_theta_duality_dim4(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  IdentityResidual<T> out;
  out.name = "dj_theta_duality_dim4";
  out.applicable = s.dim() == 4;
  if (!out.applicable) return out;
  const auto p = dim4_pieces(geo);
  const Matrix<T> dj_theta = d(s.algebra(), KForm<T>::one_form(geo.lee.j_theta)).to_matrix();
  const KForm<T> sd = KForm<T>::from_matrix(p.self_dual);
  const KForm<T> asd = KForm<T>::from_matrix(p.anti_self_dual);
  const KForm<T> star_sd = hodge_star(sd, s.g_inverse(), s.volume_coefficient());
  const KForm<T> star_asd = hodge_star(asd, s.g_inverse(), s.volume_coefficient());
  out.residual = max_of({max_abs(dj_theta - p.self_dual - p.anti_self_dual), (star_sd - sd).max_abs(),
                         (star_asd + asd).max_abs()});
  out.scale = max_of({max_abs(dj_theta), sd.max_abs(), asd.max_abs()});
  return out;
}

template <class T>
Dim4Integrand<T> dim4_integrand(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  const auto& lee = geo.lee;
  const Matrix<T>& gi = s.g_inverse();
  Dim4Integrand<T> out;
  out.delta_theta = codifferential_one_form(s, geo.connection, lee.theta);
  out.norm2_theta = lee.norm2;
  const Matrix<T> dtheta = d(s.algebra(), KForm<T>::one_form(lee.theta)).to_matrix();
  const KForm<T> nterm = KForm<T>::from_matrix(T(2) * nijenhuis_form_matrix(s, lee.JT) +
                                               j_on_two_form(s, j_anti_invariant_part(s, dtheta)));
  out.nijenhuis_term = form_norm2(nterm, gi);
  const Matrix<T> hess = j_invariant_part(s, symmetric_part(covariant_derivative_one_form(geo.connection, lee.theta)));
  out.hessian_term = form_norm2(KForm<T>::from_matrix(twist_first(s, hess)), gi);
  out.bracket_term = s.inner(s.algebra().bracket(lee.T_field, lee.JT), lee.JT);
  out.value = out.delta_theta * out.delta_theta - T(2) * out.norm2_theta * out.delta_theta +
              out.nijenhuis_term - T(4) * out.hessian_term + T(2) * out.bracket_term;
  return out;
}

template <class T>
IdentityResidual<T> cartan_formula(const LieAlgebra<T>& alg, const KForm<T>& alpha) {
  IdentityResidual<T> out;
  out.name = "cartan_formula";
  for (int i = 0; i < alg.dim(); ++i) {
    const Vector<T> x = unit_vector<T>(alg.dim(), i);
    const KForm<T> a = lie_derivative(alg, x, alpha);
    const KForm<T> b = lie_derivative_direct(alg, x, alpha);
    bump(out.residual, (a - b).max_abs());
    bump(out.scale, max_of({a.max_abs(), b.max_abs()}));
  }
  return out;
}

template <class T>
IdentityResidual<T> unimodular_codifferential(const HermitianGeometry<T>& geo) {
  IdentityResidual<T> out;
  out.name = "unimodular_codifferential";
  out.applicable = is_unimodular(geo.s.algebra(), geo.s.tolerance()).unimodular;
  for (int i = 0; i < geo.dim(); ++i) {
    const T v = codifferential_one_form(geo.s, geo.connection, unit_vector<T>(geo.dim(), i));
    bump(out.residual, abs_value(v));
  }
  out.scale = T(1);
  return out;
}

#define LCAK_INSTANTIATE_IDENTITIES(T)                                                          \
  template struct IdentityResidual<T>;                                                          \
  template IdentityResidual<T> formula_almost_hermitian(const HermitianGeometry<T>&);           \
  template IdentityResidual<T> dj_expression(const HermitianGeometry<T>&);                      \
  template IdentityResidual<T> chern_form(const HermitianGeometry<T>&);                         \
  template IdentityResidual<T> bochner_formula(const HermitianGeometry<T>&, const Vector<T>&);  \
  template IdentityResidual<T> j_invariant_wedge(const AlmostHermitianStructure<T>&,            \
                                                 const Matrix<T>&, const Matrix<T>&);           \
  template IdentityResidual<T> cyclic_nijenhuis(const AlmostHermitianStructure<T>&);            \
  template IdentityResidual<T> lie_derivative_nijenhuis(const HermitianGeometry<T>&);           \
  template IdentityResidual<T> lee_normalization(const HermitianGeometry<T>&);                  \
  template IdentityResidual<T> dj_theta_duality_dim4(const HermitianGeometry<T>&);              \
  template Dim4Integrand<T> dim4_integrand(const HermitianGeometry<T>&);                        \
  template IdentityResidual<T> cartan_formula(const LieAlgebra<T>&, const KForm<T>&);           \
  template IdentityResidual<T> unimodular_codifferential(const HermitianGeometry<T>&);

LCAK_INSTANTIATE_IDENTITIES(Rational)
LCAK_INSTANTIATE_IDENTITIES(double)

}  // namespace lcak
