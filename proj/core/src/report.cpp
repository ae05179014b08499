#include "lcak/report.hpp"

#include "json.hpp"

namespace lcak {

std::vector<std::pair<std::string, std::string>> convention_metadata() {
  return {
      {"version", kVersion},
      {"index_base", "1 in files and reports, 0 in the C++ API"},
      {"forms", "determinant convention; d alpha(X,Y) = -alpha([X,Y])"},
      {"fundamental_form", "F(X,Y) = g(JX,Y)"},
      {"J_on_forms", "(J alpha)(X) = -alpha(JX); (J psi)(X,Y) = -psi(JX,Y)"},
      {"nijenhuis", "4N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]"},
      {"curvature_sign", "R(X,Y) = D_[X,Y] - [D_X, D_Y]"},
      {"star_ricci", "rho*(X,Y) = 1/2 sum_i g(R(X,Y)u_i, J u_i)"},
      {"lee_normalization", "dF = theta^F, theta = J delta F/(n-1)"},
      {"volume", "F^n / n!"},
  };
}

bool Report::flag(const std::string& key) const {
  for (const auto& [k, v] : flags)
    if (k == key) return v;
  return false;
}

bool Report::consistent() const {
  if (!warnings.empty()) return false;
  for (const auto& e : equivalences)
    if (e.applicable && e.lhs != e.rhs) return false;
  for (const auto& r : identities)
    if (!r.holds) return false;
  return true;
}

namespace {

template <class T>
std::vector<std::string> strings(const Vector<T>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <class T>
std::vector<std::vector<std::string>> strings(const Matrix<T>& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(strings(m.row(i)));
  return out;
}

std::string mask_label(IndexMask mask) {
  std::string out;
  for (int i : mask_indices(mask)) out += std::to_string(i + 1);
  return out;
}

template <class T>
std::map<std::string, std::string> sparse_form(const KForm<T>& f, double tol) {
  std::map<std::string, std::string> out;
  for (int p = 0; p < f.size(); ++p)
    if (!is_zero(f[p], tol)) out[mask_label(f.mask(p))] = to_string(f[p]);
  return out;
}

template <class T>
ReportResidual residual_row(const std::string& name, const T& value, const T& scale, bool holds) {
  return {name, to_string(value), to_string(scale), holds};
}

}  // namespace

template <class T>
std::optional<AlmostAbelianParams<T>> detect_almost_abelian(const AlmostHermitianStructure<T>& s) {
  const int dim = s.dim();
  const int n = s.n();
  if (n < 2) return std::nullopt;
  if (!(s.g() == Matrix<T>::identity(dim)) || !(s.J() == almost_abelian_J<T>(n))) return std::nullopt;
  const auto& alg = s.algebra();
  for (int i = 0; i + 1 < dim; ++i)
    for (int j = i + 1; j + 1 < dim; ++j)
      if (!is_zero_vector(alg.bracket_basis(i, j), 0.0)) return std::nullopt;
  const Matrix<T> ad = alg.ad_basis(dim - 1);
  for (int j = 0; j < dim; ++j)
    if (ad(dim - 1, j) != T(0)) return std::nullopt;
  auto p = AlmostAbelianParams<T>::zero(n);
  p.a = ad(0, 0);
  for (int i = 0; i < 2 * n - 2; ++i) {
    p.b[i] = ad(0, i + 1);
    p.v[i] = ad(i + 1, 0);
    for (int j = 0; j < 2 * n - 2; ++j) p.A(i, j) = ad(i + 1, j + 1);
  }
  return p;
}

template <class T>
Report run_report(const AlmostHermitianStructure<T>& s, const std::string& name,
                  const std::optional<AlmostAbelianParams<T>>& almost_abelian, const ReportOptions& options) {
  const double tol = s.tolerance();
  const auto& alg = s.algebra();
  Report r;
  r.name = name;
  r.mode = to_string(ScalarTraits<T>::mode);
  r.tolerance = tol;
  r.dim = s.dim();
  r.metadata = convention_metadata();

  const HermitianGeometry<T> geo = analyze(s);
  const ConditionReport<T> cr = classify_metric(geo);
  r.flags = {
      {"is_lcs", cr.is_lcs},
      {"lee_closed", cr.lee_closed},
      {"is_gcs", cr.is_gcs},
      {"gauduchon", cr.is_gauduchon},
      {"T_orthogonal_to_imN", cr.T_orthogonal_to_imN},
      {"D_theta_J_anti_invariant", cr.dtheta_J_anti_invariant},
      {"D_theta_J_invariant", cr.dtheta_J_invariant},
      {"pluricanonical", cr.pluricanonical},
      {"anti_pluricanonical", cr.anti_pluricanonical},
      {"vaisman", cr.vaisman},
      {"first_kind", cr.first_kind},
      {"adapted", cr.adapted},
      {"adapted_up_to_homothety", cr.adapted_up_to_homothety},
      {"lee_field_holomorphic", cr.lee_field_holomorphic},
      {"JT_killing", cr.JT_killing},
      {"unimodular", cr.unimodular},
      {"integrable", cr.integrable},
  };
  r.kind = cr.is_lcs ? to_string(cr.kind) : "not_lcs";

  r.theta = strings(geo.lee.theta);
  r.lee_field = strings(geo.lee.T_field);
  r.characteristic_field = strings(geo.lee.V);
  r.F = sparse_form(s.F(), tol);
  r.dF = sparse_form(d(alg, s.F()), tol);
  const auto ntab = nijenhuis_table(s);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (!is_zero_vector(ntab[i][j], tol))
        r.nijenhuis[std::to_string(i + 1) + "," + std::to_string(j + 1)] = strings(ntab[i][j]);
  for (const auto& v : image_of_N(s)) r.image_of_N.push_back(strings(v));
  r.D_theta_sym = strings(symmetric_part(covariant_derivative_one_form(geo.connection, geo.lee.theta)));
  r.rho_star = strings(geo.rho_star);

  for (const auto& res : cr.residuals) r.residuals.push_back(residual_row(res.name, res.value, res.scale, vanishes(res, tol)));
  r.warnings = cr.warnings;

  if (cr.first_kind) r.automorphism_T = strings(check_first_kind(s).T_candidate);

  if (cr.is_lcs) {
    const TheoremReport<T> th = verify_equivalences(geo, cr);
    for (const auto& e : th.equivalences) r.equivalences.push_back({e.name, e.applicable, e.lhs, e.rhs});
    for (const auto& res : th.residuals)
      r.residuals.push_back(residual_row("theorem_" + res.name, res.value, res.scale, vanishes(res, tol)));
  }

  // Identities valid on this structure.
  std::vector<IdentityResidual<T>> ids;
  auto keep = [&](IdentityResidual<T> id, bool applicable) {
    id.applicable = id.applicable && applicable;
    if (id.applicable) ids.push_back(std::move(id));
  };
  keep(formula_almost_hermitian(geo), s.dim() == 4 || cr.is_lcs);
  keep(dj_expression(geo), cr.is_lcs);
  keep(chern_form(geo), true);
  keep(bochner_formula(geo, geo.lee.theta), true);
  keep(bochner_formula(geo, geo.lee.j_theta), true);
  const Matrix<T> djt = d(alg, KForm<T>::one_form(geo.lee.j_theta)).to_matrix();
  keep(j_invariant_wedge(s, s.F_matrix(), j_invariant_part(s, djt)), true);
  keep(cyclic_nijenhuis(s), cr.is_lcs);
  keep(lie_derivative_nijenhuis(geo), true);
  keep(lee_normalization(geo), true);
  keep(dj_theta_duality_dim4(geo), true);
  keep(cartan_formula(alg, s.F()), true);
  keep(unimodular_codifferential(geo), true);
  for (const auto& id : ids) r.identities.push_back(residual_row(id.name, id.residual, id.scale, id.holds(tol)));

  if (options.feasibility) {
    FeasibilityOptions fo;
    fo.tol = tol;
    const auto f = symplectic_feasibility(s, fo);
    ReportFeasibility rf;
    rf.status = to_string(f.status);
    rf.optimum = ScalarTraits<double>::to_string(f.optimum);
    rf.subspace_dim = f.subspace_dim;
    rf.scope = f.scope;
    rf.certificate = f.certificate;
    if (f.witness) rf.witness = sparse_form(*f.witness, tol);
    r.feasibility = rf;
  }

  std::optional<AlmostAbelianParams<T>> aa = almost_abelian ? almost_abelian : detect_almost_abelian(s);
  if (aa && aa->n == 2) {
    ReportClassification rc;
    try {
      const Classification<T> c = classify_4d(*aa, tol);
      rc.label = c.label.str();
      rc.jordan = c.jordan.str();
      rc.b_dot_v = to_string(c.b_dot_v);
      rc.agree = c.agree();
    } catch (const Error& e) {
      rc.error = e.reason() + ": " + e.what();
    }
    r.classification = rc;
  }
  return r;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson residuals_json(const std::vector<ReportResidual>& rows) {
  ojson out = ojson::array();
  for (const auto& x : rows) out.push_back({{"name", x.name}, {"value", x.value}, {"scale", x.scale}, {"holds", x.holds}});
  return out;
}

std::vector<ReportResidual> residuals_from(const ojson& a) {
  std::vector<ReportResidual> out;
  for (const auto& x : a)
    out.push_back({x.at("name").get<std::string>(), x.at("value").get<std::string>(), x.at("scale").get<std::string>(),
                   x.at("holds").get<bool>()});
  return out;
}

ojson map_json(const std::map<std::string, std::string>& m) {
  ojson out = ojson::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

std::map<std::string, std::string> map_from(const ojson& o) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : o.items()) out[k] = v.get<std::string>();
  return out;
}

}  // namespace

std::string to_json(const Report& r, int indent) {
  ojson j;
  j["name"] = r.name;
  j["mode"] = r.mode;
  j["tolerance"] = r.tolerance;
  j["dim"] = r.dim;
  ojson meta = ojson::object();
  for (const auto& [k, v] : r.metadata) meta[k] = v;
  j["metadata"] = meta;
  ojson flags = ojson::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  j["flags"] = flags;
  j["kind"] = r.kind;
  j["theta"] = r.theta;
  j["lee_field"] = r.lee_field;
  j["characteristic_field"] = r.characteristic_field;
  j["F"] = map_json(r.F);
  j["dF"] = map_json(r.dF);
  ojson nj = ojson::object();
  for (const auto& [k, v] : r.nijenhuis) nj[k] = v;
  j["nijenhuis"] = nj;
  j["image_of_N"] = r.image_of_N;
  j["D_theta_sym"] = r.D_theta_sym;
  j["rho_star"] = r.rho_star;
  j["automorphism_T"] = r.automorphism_T ? ojson(*r.automorphism_T) : ojson(nullptr);
  j["residuals"] = residuals_json(r.residuals);
  j["identities"] = residuals_json(r.identities);
  ojson eq = ojson::array();
  for (const auto& e : r.equivalences)
    eq.push_back({{"name", e.name}, {"applicable", e.applicable}, {"lhs", e.lhs}, {"rhs", e.rhs}});
  j["equivalences"] = eq;
  j["warnings"] = r.warnings;
  if (r.feasibility) {
    const auto& f = *r.feasibility;
    j["feasibility"] = {{"status", f.status},       {"optimum", f.optimum},     {"subspace_dim", f.subspace_dim},
                        {"scope", f.scope},         {"certificate", f.certificate}, {"witness", map_json(f.witness)}};
  } else {
    j["feasibility"] = nullptr;
  }
  if (r.classification) {
    const auto& c = *r.classification;
    j["classification"] = {{"label", c.label}, {"jordan", c.jordan}, {"b_dot_v", c.b_dot_v},
                           {"agree", c.agree}, {"error", c.error}};
  } else {
    j["classification"] = nullptr;
  }
  j["consistent"] = r.consistent();
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw Error(ErrorCode::ParseError, "BAD_JSON", e.what());
  }
  try {
    Report r;
    r.name = j.at("name").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.tolerance = j.at("tolerance").get<double>();
    r.dim = j.at("dim").get<int>();
    for (const auto& [k, v] : j.at("metadata").items()) r.metadata.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : j.at("flags").items()) r.flags.emplace_back(k, v.get<bool>());
    r.kind = j.at("kind").get<std::string>();
    r.theta = j.at("theta").get<std::vector<std::string>>();
    r.lee_field = j.at("lee_field").get<std::vector<std::string>>();
    r.characteristic_field = j.at("characteristic_field").get<std::vector<std::string>>();
    r.F = map_from(j.at("F"));
    r.dF = map_from(j.at("dF"));
    for (const auto& [k, v] : j.at("nijenhuis").items()) r.nijenhuis[k] = v.get<std::vector<std::string>>();
    r.image_of_N = j.at("image_of_N").get<std::vector<std::vector<std::string>>>();
    r.D_theta_sym = j.at("D_theta_sym").get<std::vector<std::vector<std::string>>>();
    r.rho_star = j.at("rho_star").get<std::vector<std::vector<std::string>>>();
    if (!j.at("automorphism_T").is_null()) r.automorphism_T = j.at("automorphism_T").get<std::vector<std::string>>();
    r.residuals = residuals_from(j.at("residuals"));
    r.identities = residuals_from(j.at("identities"));
    for (const auto& e : j.at("equivalences"))
      r.equivalences.push_back({e.at("name").get<std::string>(), e.at("applicable").get<bool>(),
                                e.at("lhs").get<bool>(), e.at("rhs").get<bool>()});
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (!j.at("feasibility").is_null()) {
      const auto& f = j.at("feasibility");
      r.feasibility = ReportFeasibility{f.at("status").get<std::string>(), f.at("optimum").get<std::string>(),
                                        f.at("subspace_dim").get<int>(),  f.at("scope").get<std::string>(),
                                        f.at("certificate").get<std::string>(), map_from(f.at("witness"))};
    }
    if (!j.at("classification").is_null()) {
      const auto& c = j.at("classification");
      r.classification = ReportClassification{c.at("label").get<std::string>(), c.at("jordan").get<std::string>(),
                                              c.at("b_dot_v").get<std::string>(), c.at("agree").get<bool>(),
                                              c.at("error").get<std::string>()};
    }
    return r;
  } catch (const ojson::exception& e) {
    throw Error(ErrorCode::ParseError, "BAD_REPORT", e.what());
  }
}

#define LCAK_INSTANTIATE_REPORT(T)                                                                        \
  template Report run_report(const AlmostHermitianStructure<T>&, const std::string&,                     \
                             const std::optional<AlmostAbelianParams<T>>&, const ReportOptions&);         \
  template std::optional<AlmostAbelianParams<T>> detect_almost_abelian(const AlmostHermitianStructure<T>&);

LCAK_INSTANTIATE_REPORT(Rational)
LCAK_INSTANTIATE_REPORT(double)

}  // namespace lcak
