#include "lcak/conditions.hpp"

#include <algorithm>

namespace lcak {

template <class T>
bool vanishes(const Residual<T>& r, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return r.value == 0;
  } else {
    return r.value <= tol * std::max(1.0, r.scale);
  }
}

const char* to_string(LcsKind kind) {
  switch (kind) {
    case LcsKind::First: return "first";
    case LcsKind::Second: return "second";
    case LcsKind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* to_string(FeasibilityStatus status) {
  switch (status) {
    case FeasibilityStatus::Feasible: return "feasible";
    case FeasibilityStatus::Infeasible: return "infeasible";
    case FeasibilityStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
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
Matrix<T> wedge11(const Vector<T>& a, const Vector<T>& b) {
  return wedge(KForm<T>::one_form(a), KForm<T>::one_form(b)).to_matrix();
}

template <class T>
Matrix<T> dtheta_matrix(const AlmostHermitianStructure<T>& s, const Vector<T>& theta) {
  return d(s.algebra(), KForm<T>::one_form(theta)).to_matrix();
}

}  // namespace

template <class T>
LcsCheck<T> check_lcs(const AlmostHermitianStructure<T>& s) {
  const LeeData<T> lee = lee_form(s);
  LcsCheck<T> out;
  out.theta = lee.theta;
  out.df_residual = lee.residual;
  out.dtheta_residual = max_abs(dtheta_matrix(s, lee.theta));
  const T scale = max_of({d(s.algebra(), s.F()).max_abs(), max_abs(lee.theta)});
  out.lee_closed = vanishes(Residual<T>{"d_theta", out.dtheta_residual, scale}, s.tolerance());
  out.is_lcs = vanishes(Residual<T>{"dF", out.df_residual, scale}, s.tolerance()) && out.lee_closed;
  return out;
}

template <class T>
AutomorphismAlgebra<T> automorphism_algebra(const AlmostHermitianStructure<T>& s,
                                            const Vector<T>& theta) {
  const int n = s.dim();
  const int rows = KForm<T>(n, 2).size();
  Matrix<T> m(rows, n);
  for (int i = 0; i < n; ++i) {
    const KForm<T> l = lie_derivative_F(s, unit_vector<T>(n, i));
    for (int r = 0; r < rows; ++r) m(r, i) = l[r];
  }
  AutomorphismAlgebra<T> out;
  out.basis = nullspace(m, s.tolerance());
  bool onto = false;
  for (const auto& x : out.basis) {
    out.lee_morphism.push_back(dot(theta, x));
    if (!is_zero(out.lee_morphism.back(), s.tolerance())) onto = true;
  }
  out.kind = onto ? LcsKind::First : LcsKind::Second;
  return out;
}

template <class T>
FirstKindCheck<T> check_first_kind(const AlmostHermitianStructure<T>& s) {
  const LcsCheck<T> lcs = check_lcs(s);
  if (!lcs.is_lcs) throw Error(ErrorCode::NotLCS, "NOT_LCS", "structure is not LCS");
  FirstKindCheck<T> out;
  out.automorphisms = automorphism_algebra(s, lcs.theta);
  out.first_kind = out.automorphisms.kind == LcsKind::First;
  if (!out.first_kind) return out;
  // Minimal g-norm X = B c with theta(X) = 1: c = G^{-1} a / (a^T G^{-1} a),
  // G = B^T g B, a = B^T theta.
  const auto& basis = out.automorphisms.basis;
  const Matrix<T> b = Matrix<T>::from_columns(basis, s.dim());
  const Matrix<T> gram = b.transpose() * s.g() * b;
  const Vector<T> a = b.transpose() * lcs.theta;
  auto ginv_a = solve(gram, a, s.tolerance());
  if (!ginv_a) fail(ErrorCode::Degenerate, "automorphism Gram matrix is singular");
  const T denom = dot(a, *ginv_a);
  out.T_candidate = b * ((T(1) / denom) * *ginv_a);
  out.eta = -contract(out.T_candidate, s.F()).to_vector();
  const KForm<T> eta = KForm<T>::one_form(out.eta);
  const KForm<T> rhs = d(s.algebra(), eta) - wedge(KForm<T>::one_form(lcs.theta), eta);
  out.f1stkind_residual = (s.F() - rhs).max_abs();
  return out;
}

namespace {

template <class T>
AdaptedCheck<T> adapted_strict(const AlmostHermitianStructure<T>& s, const FirstKindCheck<T>& fk,
                               const Vector<T>& theta) {
  const int n = s.dim();
  const double tol = s.tolerance();
  AdaptedCheck<T> out;
  out.T_candidate = fk.T_candidate;
  const Vector<T>& t = out.T_candidate;
  const Vector<T>& eta = fk.eta;
  auto v = solve(s.F_matrix().transpose(), theta, tol);
  if (!v) fail(ErrorCode::NondegeneracyFailure, "iota_V F = theta has no solution");
  out.V = *v;
  const Vector<T> jt = s.J() * t;
  const Vector<T> jv = s.J() * out.V;

  out.j_theta_plus_eta = max_abs(j_on_one_form(s, theta) + eta);
  out.jv_minus_t = max_abs(jv - t);

  out.h_basis = nullspace(Matrix<T>::from_rows({theta, eta}, n), tol);
  T split(0);
  for (const auto& h : out.h_basis) {
    const Vector<T> jh = s.J() * h;
    split = max_of({split, abs_value(dot(theta, jh)), abs_value(dot(eta, jh))});
  }
  // J Span(T, V) = Span(T, V) given JV = T amounts to JT = -V.
  split = max_of({split, max_abs(jt + out.V), out.jv_minus_t});
  out.splitting_residual = split;

  // d eta(X, JY) on H.
  const Matrix<T> deta = d(s.algebra(), KForm<T>::one_form(eta)).to_matrix();
  const int hd = static_cast<int>(out.h_basis.size());
  Matrix<T> hform(hd, hd);
  for (int a = 0; a < hd; ++a)
    for (int b = 0; b < hd; ++b) hform(a, b) = bilinear(out.h_basis[a], deta, s.J() * out.h_basis[b]);
  out.h_form_positive = is_zero(max_abs(hform - hform.transpose()), tol) && is_positive_definite(hform, tol);

  T ortho = max_of({abs_value(T(s.inner(t, t) - T(1))), abs_value(T(s.inner(out.V, out.V) - T(1))),
                    abs_value(s.inner(t, out.V))});
  for (const auto& h : out.h_basis)
    ortho = max_of({ortho, abs_value(s.inner(h, t)), abs_value(s.inner(h, out.V))});
  out.orthonormality_residual = ortho;

  const T scale = max_of({max_abs(theta), max_abs(eta), T(1)});
  auto ok = [&](const T& r) { return vanishes(Residual<T>{"", r, scale}, tol); };
  out.adapted = fk.first_kind && ok(out.j_theta_plus_eta) && ok(out.splitting_residual) && out.h_form_positive;
  return out;
}

}  // namespace

template <class T>
AdaptedCheck<T> check_adapted(const AlmostHermitianStructure<T>& s) {
  const FirstKindCheck<T> fk = check_first_kind(s);
  if (!fk.first_kind) throw Error(ErrorCode::NotFirstKind, "NOT_FIRST_KIND", "LCS structure is not of the first kind");
  const Vector<T> theta = lee_form(s).theta;
  AdaptedCheck<T> out = adapted_strict(s, fk, theta);
  const T c = dot(theta, s.sharp(theta));
  out.homothety_factor = c;
  if (out.adapted) {
    out.adapted_up_to_homothety = true;
  } else if (!is_zero(c, s.tolerance())) {
    // (cF, cg) has the same Lee form and |theta| = 1.
    const AlmostHermitianStructure<T> scaled(s.algebra(), s.J(), s.g() * c, s.tolerance());
    const FirstKindCheck<T> fk2 = check_first_kind(scaled);
    out.adapted_up_to_homothety = fk2.first_kind && adapted_strict(scaled, fk2, theta).adapted;
  }
  return out;
}

template <class T>
const Residual<T>* ConditionReport<T>::find(const std::string& name) const {
  for (const auto& r : residuals)
    if (r.name == name) return &r;
  return nullptr;
}

template <class T>
ConditionReport<T> classify_metric(const HermitianGeometry<T>& geo) {
  const auto& s = geo.s;
  const auto& alg = s.algebra();
  const double tol = s.tolerance();
  const int n = s.dim();
  ConditionReport<T> rep;
  rep.lee = geo.lee;
  const auto& lee = rep.lee;
  auto add = [&](const std::string& name, const T& value, const T& scale) {
    rep.residuals.push_back({name, value, scale});
    return vanishes(rep.residuals.back(), tol);
  };

  const T theta_size = max_of({max_abs(lee.theta), max_abs(lee.T_field)});
  const Matrix<T> dtheta = dtheta_matrix(s, lee.theta);
  const T df_scale = max_of({d(alg, s.F()).max_abs(), theta_size});
  const bool df_ok = add("dF_minus_theta_wedge_F", lee.residual, df_scale);
  rep.lee_closed = add("d_theta", max_abs(dtheta), df_scale);
  rep.is_lcs = df_ok && rep.lee_closed;
  rep.is_gcs = add("theta", max_abs(lee.theta), T(1));

  rep.unimodular = is_unimodular(alg, tol).unimodular;

  const Matrix<T> dth = covariant_derivative_one_form(geo.connection, lee.theta);
  const T dth_scale = max_of({max_abs(dth), theta_size});
  const T delta_theta = codifferential_one_form(s, geo.connection, lee.theta);
  rep.is_gauduchon = add("delta_theta", abs_value(delta_theta), dth_scale);

  const auto ntab = nijenhuis_table(s);
  T n_size(0), orth(0);
  const Vector<T> gt = s.flat(lee.T_field), gjt = s.flat(lee.JT);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      n_size = max_of({n_size, max_abs(ntab[i][j])});
      orth = max_of({orth, abs_value(dot(ntab[i][j], gt)), abs_value(dot(ntab[i][j], gjt))});
    }
  rep.integrable = add("nijenhuis", n_size, T(1));
  const T g_size = max_abs(s.g());
  rep.T_orthogonal_to_imN = add("imN_dot_T_JT", orth, n_size * g_size * max_of({theta_size, T(1)}));

  const Matrix<T> dth_plus = j_invariant_part(s, dth);
  const Matrix<T> dth_minus = j_anti_invariant_part(s, dth);
  rep.dtheta_J_anti_invariant = add("D_theta_J_plus", max_abs(dth_plus), dth_scale);
  rep.dtheta_J_invariant = add("D_theta_J_minus", max_abs(dth_minus), dth_scale);
  const bool parallel = add("D_theta", max_abs(dth), dth_scale);

  rep.pluricanonical = rep.is_lcs && rep.T_orthogonal_to_imN && rep.dtheta_J_anti_invariant;
  rep.anti_pluricanonical = rep.is_lcs && rep.T_orthogonal_to_imN && rep.dtheta_J_invariant;
  rep.vaisman = rep.is_lcs && parallel;

  const Matrix<T> ltj = lie_derivative_J(s, lee.T_field);
  const T ltj_scale = max_of({max_abs(alg.ad(lee.T_field)) * max_abs(s.J()), T(1)});
  rep.lee_field_holomorphic = add("L_T_J", max_abs(ltj), ltj_scale);

  const Matrix<T> djth = covariant_derivative_one_form(geo.connection, lee.j_theta);
  rep.JT_killing = add("D_J_theta_sym", max_abs(symmetric_part(djth)), max_of({max_abs(djth), theta_size}));

  if (rep.is_lcs) {
    const FirstKindCheck<T> fk = check_first_kind(s);
    rep.kind = fk.automorphisms.kind;
    rep.first_kind = fk.first_kind;
    if (fk.first_kind) {
      add("F_minus_d_eta_plus_theta_wedge_eta", fk.f1stkind_residual, max_abs(s.F_matrix()));
      const AdaptedCheck<T> ad = check_adapted(s);
      rep.adapted = ad.adapted;
      rep.adapted_up_to_homothety = ad.adapted_up_to_homothety;
      add("J_theta_plus_eta", ad.j_theta_plus_eta, theta_size);
      add("adapted_orthonormality", ad.orthonormality_residual, T(1));
      if (ad.adapted != vanishes(Residual<T>{"", ad.orthonormality_residual, T(1)}, tol))
        rep.warnings.push_back("adapted: the splitting and orthonormality characterizations disagree");
    }
  }

  // Implications that must hold on every input.
  auto warn_unless = [&](bool premise, const std::string& name, const T& value, const T& scale,
                         const std::string& text) {
    const bool ok = add(name, value, scale);
    if (premise && !ok) rep.warnings.push_back(text);
  };
  const Matrix<T> dj_theta = d(alg, KForm<T>::one_form(lee.j_theta)).to_matrix();
  const Matrix<T> lee_symp = -(s.F_matrix() * lee.norm2) + wedge11(lee.theta, lee.j_theta);
  const T dj_scale = max_of({max_abs(dj_theta), max_abs(lee_symp)});
  warn_unless(rep.pluricanonical, "dJ_theta_minus_lee_symplectomorphism", max_abs(dj_theta - lee_symp), dj_scale,
              "pluricanonical but dJtheta != -|theta|^2 F + theta ^ J theta");
  const KForm<T> ltf = lie_derivative_F(s, lee.T_field);
  warn_unless(rep.pluricanonical, "L_T_F", ltf.max_abs(), max_of({max_abs(s.F_matrix()) * theta_size, T(1)}),
              "pluricanonical but L_T F != 0");
  if (rep.pluricanonical && !rep.is_gauduchon) rep.warnings.push_back("pluricanonical but not Gauduchon");

  const bool t_orth_lcs = rep.T_orthogonal_to_imN && rep.is_lcs;
  warn_unless(t_orth_lcs, "dJ_theta_J_minus", max_abs(j_anti_invariant_part(s, dj_theta)), dj_scale,
              "T orthogonal to imN but dJtheta is not J-invariant");
  const Matrix<T> nt = nijenhuis_tensor(s, lee.T_field);
  warn_unless(t_orth_lcs, "N_T_antisym", max_abs(nt - nt.transpose()), max_of({max_abs(nt), T(1)}),
              "T orthogonal to imN but N(T) is not symmetric");
  T dj_size(0);
  for (const auto& m : geo.dj) dj_size = max_of({dj_size, max_abs(m)});
  const Matrix<T> dtj = geo.dj_along(lee.T_field);
  const Matrix<T> djtj = geo.dj_along(lee.JT);
  warn_unless(t_orth_lcs, "D_T_J_and_D_JT_J", max_of({max_abs(dtj), max_abs(djtj)}),
              max_of({dj_size, theta_size, T(1)}),
              "T orthogonal to imN but D_T J or D_JT J is nonzero");
  if (rep.vaisman && !(rep.pluricanonical && rep.anti_pluricanonical))
    rep.warnings.push_back("Vaisman but not both pluricanonical and anti-pluricanonical");

  if (rep.unimodular) {
    const T rho_tjt = bilinear(lee.T_field, geo.rho_star, lee.JT);
    warn_unless(rep.pluricanonical, "rho_star_T_JT", abs_value(rho_tjt), max_of({max_abs(geo.rho_star), T(1)}),
                "unimodular pluricanonical but rho*(T, JT) != 0");
    const T hess = form_norm2(KForm<T>::from_matrix(twist_first(s, dth_plus)), s.g_inverse());
    const Vector<T> d_jt_theta = dth.transpose() * lee.JT;  // (D_{JT} theta)(.)
    const T cross = bilinear(d_jt_theta, s.g_inverse(), lee.j_theta);
    warn_unless(rep.pluricanonical, "unimodular_hessian_identity", abs_value(T(T(2) * hess + T(4) * cross)),
                max_of({dth_scale * dth_scale, T(1)}),
                "unimodular pluricanonical but 2|(D theta)^{J,+}|^2 + 4 g(D_JT theta, J theta) != 0");
  }
  return rep;
}

template <class T>
bool TheoremReport<T>::all_consistent() const {
  for (const auto& e : equivalences)
    if (!e.consistent()) return false;
  return true;
}

template <class T>
TheoremReport<T> verify_equivalences(const HermitianGeometry<T>& geo, const ConditionReport<T>& rep) {
  if (!rep.is_lcs) throw Error(ErrorCode::NotLCS, "NOT_LCS", "structure is not LCS");
  const auto& s = geo.s;
  const auto& lee = rep.lee;
  const double tol = s.tolerance();
  TheoremReport<T> out;
  auto add = [&](const std::string& name, const T& value, const T& scale) {
    out.residuals.push_back({name, value, scale});
    return vanishes(out.residuals.back(), tol);
  };
  const T theta_size = max_of({max_abs(lee.theta), max_abs(lee.T_field), T(1)});

  out.equivalences.push_back({"a_pluricanonical_iff_first_kind_and_adapted", !rep.is_gcs, rep.pluricanonical,
                              rep.first_kind && rep.adapted_up_to_homothety});

  const T bracket = s.inner(s.algebra().bracket(lee.T_field, lee.JT), lee.JT);
  const bool bracket_zero = add("g_T_JT_JT", abs_value(bracket), theta_size * theta_size * theta_size *
                                                                      max_of({max_abs(s.g()), T(1)}));
  out.equivalences.push_back({"b_unimodular_pluricanonical_iff_bracket", rep.unimodular && rep.T_orthogonal_to_imN,
                              rep.pluricanonical, bracket_zero});

  out.equivalences.push_back({"c_anti_pluricanonical_iff_L_T_J", true, rep.anti_pluricanonical,
                              rep.lee_field_holomorphic});

  const Matrix<T> dth = covariant_derivative_one_form(geo.connection, lee.theta);
  const Matrix<T> djth = covariant_derivative_one_form(geo.connection, lee.j_theta);
  const Vector<T> d_t_theta = dth.transpose() * lee.T_field;
  const Vector<T> d_jt_theta = dth.transpose() * lee.JT;
  const Vector<T> d_t_jtheta = djth.transpose() * lee.T_field;
  const Vector<T> d_jt_jtheta = djth.transpose() * lee.JT;
  const Vector<T> t_jt = s.algebra().bracket(lee.T_field, lee.JT);
  const T consequences = max_of({max_abs(d_t_theta), max_abs(d_jt_theta), max_abs(d_t_jtheta),
                                 max_abs(d_jt_jtheta), max_abs(t_jt)});
  const bool consequences_zero = add("pluricanonical_consequences", consequences,
                                     max_of({max_abs(dth), max_abs(djth), T(1)}) * theta_size);
  // Left-invariant data has constant |theta|, so only the five quantities matter.
  out.equivalences.push_back({"d_pluricanonical_consequences", rep.pluricanonical, true, consequences_zero});

  const bool dim4_unimodular = s.dim() == 4 && rep.unimodular;
  bool integrand_zero = true;
  if (dim4_unimodular) {
    const Dim4Integrand<T> di = dim4_integrand(geo);
    integrand_zero = add("dim4_integrand", abs_value(di.value),
                         max_of({abs_value(di.nijenhuis_term), abs_value(di.hessian_term),
                                 abs_value(di.bracket_term), di.delta_theta * di.delta_theta, T(1)}));
  }
  out.equivalences.push_back({"e_dim4_integrand_vanishes", dim4_unimodular, true, integrand_zero});
  return out;
}

#define LCAK_INSTANTIATE_CONDITIONS(T)                                                             \
  template bool vanishes(const Residual<T>&, double);                                              \
  template struct ConditionReport<T>;                                                              \
  template struct TheoremReport<T>;                                                                \
  template LcsCheck<T> check_lcs(const AlmostHermitianStructure<T>&);                              \
  template AutomorphismAlgebra<T> automorphism_algebra(const AlmostHermitianStructure<T>&,         \
                                                       const Vector<T>&);                          \
  template FirstKindCheck<T> check_first_kind(const AlmostHermitianStructure<T>&);                 \
  template AdaptedCheck<T> check_adapted(const AlmostHermitianStructure<T>&);                      \
  template ConditionReport<T> classify_metric(const HermitianGeometry<T>&);                        \
  template TheoremReport<T> verify_equivalences(const HermitianGeometry<T>&, const ConditionReport<T>&);

LCAK_INSTANTIATE_CONDITIONS(Rational)
LCAK_INSTANTIATE_CONDITIONS(double)

}  // namespace lcak
