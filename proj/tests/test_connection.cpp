#include "lcak/conditions.hpp"
#include "test_support.hpp"

using namespace lcak;
using namespace lcak::test;

namespace {

// Koszul formula solved against g^{-1} directly.
Vector<Q> koszul(const AlmostHermitianStructure<Q>& s, const Vector<Q>& x, const Vector<Q>& y) {
  const auto& alg = s.algebra();
  Vector<Q> lowered(s.dim(), Q(0));
  for (int k = 0; k < s.dim(); ++k) {
    const auto z = e(s.dim(), k);
    lowered[k] = (s.inner(alg.bracket(x, y), z) - s.inner(alg.bracket(y, z), x) + s.inner(alg.bracket(z, x), y)) / 2;
  }
  return s.sharp(lowered);
}

HermitianGeometry<Q> geometry_of(const AlmostHermitianStructure<Q>& s) { return analyze(s); }

}  // namespace

TEST(Connection, FlatOnAbelian) {
  const auto geo = geometry_of(kahler());
  for (const auto& m : geo.connection.gamma) EXPECT_EQ(m, Matrix<Q>(4, 4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(geo.curv.r[i][j], Matrix<Q>(4, 4));
  EXPECT_EQ(geo.rho_star, Matrix<Q>(4, 4));
}

TEST(Connection, LeeFormDerivativeOnA41) {
  const auto c = levi_civita(a41());
  const auto dt = covariant_derivative_one_form(c, -e(4, 2));
  EXPECT_EQ(dt(1, 3), q("1/2"));
  EXPECT_EQ(dt(3, 1), q("1/2"));
}

TEST(Connection, DefiningResidualsVanishOnExamples) {
  for (const auto* s : {&a41(), &a48(), &kahler()}) {
    const auto c = levi_civita(*s);
    EXPECT_EQ(koszul_residual(*s, c), Q(0));
    EXPECT_EQ(torsion_residual(*s, c), Q(0));
    EXPECT_EQ(metric_residual(*s, c), Q(0));
  }
}

TEST(Connection, KoszulAgainstDirectSolve) {
  for (int k = 0; k < 20; ++k) {
    Rng rng = rng_for(401, k);
    const auto s = random_hermitian(rng, k % 2 ? 4 : 6, false);
    const auto c = levi_civita(s);
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        EXPECT_EQ(c.derivative(e(s.dim(), i), e(s.dim(), j)), koszul(s, e(s.dim(), i), e(s.dim(), j)));
    EXPECT_EQ(torsion_residual(s, c), Q(0));
    EXPECT_EQ(metric_residual(s, c), Q(0));
  }
}

TEST(Connection, DerivativeOfFMatchesExpressionOnLcsEntries) {
  for (const auto& entry : catalog()) {
    const auto geo = geometry_of(entry.structure);
    if (!geo.lee.exact_solution) continue;
    EXPECT_EQ(dj_expression(geo).residual, Q(0)) << entry.name;
  }
}

TEST(Connection, LeeFieldsAreJParallelOnA41) {
  const auto geo = geometry_of(a41());
  EXPECT_EQ(geo.dj_along(geo.lee.T_field), Matrix<Q>(4, 4));
  EXPECT_EQ(geo.dj_along(geo.lee.JT), Matrix<Q>(4, 4));
}

TEST(Connection, DerivativeOfJAgreesWithTensorRule) {
  const auto& s = a48();
  const auto c = levi_civita(s);
  const auto dj = covariant_derivative_endomorphism(c, s.J());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto x = e(4, i), y = e(4, j);
      EXPECT_EQ(dj[i] * y, c.derivative(x, s.apply_J(y)) - s.apply_J(c.derivative(x, y)));
    }
}

TEST(Connection, DerivativeOfTwoTensorMatchesForm) {
  const auto& s = a41();
  const auto c = levi_civita(s);
  const auto tensor = covariant_derivative_tensor(c, s.F_matrix());
  const auto form = covariant_derivative_form(c, s.F());
  for (int i = 0; i < 4; ++i) EXPECT_EQ(KForm<Q>::from_matrix(tensor[i]), form[i]);
}

TEST(Connection, CurvatureSymmetriesOnRandomUnimodular) {
  for (int k = 0; k < 20; ++k) {
    Rng rng = rng_for(402, k);
    const auto s = random_hermitian(rng, k % 2 ? 4 : 6, true);
    const auto r = curvature(s.algebra(), levi_civita(s));
    const auto sym = curvature_symmetries(s, r);
    EXPECT_EQ(sym.bianchi, Q(0));
    EXPECT_EQ(sym.antisymmetry_xy, Q(0));
    EXPECT_EQ(sym.antisymmetry_zw, Q(0));
    EXPECT_EQ(sym.pair_symmetry, Q(0));
  }
}

TEST(Connection, CurvatureSignConvention) {
  // R_{X,Y} = D_[X,Y] - [D_X, D_Y] on basis vectors.
  const auto& s = a48();
  const auto c = levi_civita(s);
  const auto r = curvature(s.algebra(), c);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Matrix<Q> di = c.gamma[i], dj = c.gamma[j];
      EXPECT_EQ(r.r[i][j], c.along(s.algebra().bracket_basis(i, j)) - (di * dj - dj * di));
    }
}

TEST(Connection, StarRicciVanishesOnLeePairOfA41) {
  const auto geo = geometry_of(a41());
  EXPECT_EQ(bilinear(geo.lee.T_field, geo.rho_star, geo.lee.JT), Q(0));
  EXPECT_EQ(geo.rho_star, -geo.rho_star.transpose());
}

TEST(Connection, RicciFormsOfFlatKahler) {
  const auto geo = geometry_of(kahler());
  const auto forms = canonical_connection_forms(geo.s, geo.connection, geo.curv, geo.lee.theta);
  EXPECT_EQ(forms.phi, Matrix<Q>(4, 4));
  EXPECT_EQ(forms.gamma0, Matrix<Q>(4, 4));
  EXPECT_EQ(forms.rho_star, Matrix<Q>(4, 4));
}

TEST(Connection, PhiVanishesOnLeePairOfA41) {
  const auto geo = geometry_of(a41());
  const auto forms = canonical_connection_forms(geo.s, geo.connection, geo.curv, geo.lee.theta);
  EXPECT_EQ(bilinear(geo.lee.T_field, forms.phi, geo.lee.JT), Q(0));
}

TEST(Connection, ChernFormIdentityOnExamples) {
  for (const auto& entry : catalog()) EXPECT_EQ(chern_form(geometry_of(entry.structure)).residual, Q(0)) << entry.name;
}

TEST(Connection, GammaFamilyAtNamedValues) {
  const auto geo = geometry_of(a48());
  const auto forms = canonical_connection_forms(geo.s, geo.connection, geo.curv, geo.lee.theta);
  const Matrix<Q> djt = d(geo.s.algebra(), KForm<Q>::one_form(geo.lee.j_theta)).to_matrix();
  EXPECT_EQ(forms.dj_theta, djt);
  EXPECT_EQ(forms.gamma(Q(0)), forms.gamma0);
  // n = 2: gamma^t = gamma^0 - t/2 dJtheta.
  EXPECT_EQ(forms.gamma(Q(1)), forms.gamma0 - q("1/2") * djt);
  EXPECT_EQ(forms.gamma(Q(-1)), forms.gamma0 + q("1/2") * djt);
}

TEST(Connection, FirstCanonicalConnectionPreservesJ) {
  const auto& s = a48();
  const auto c = levi_civita(s);
  for (const auto& m : first_canonical_connection(s, c)) EXPECT_EQ(m * s.J(), s.J() * m);
}

TEST(ConnectionProperty, IdentitiesOnRandomStructures) {
  for (int k = 0; k < 30; ++k) {
    Rng rng = rng_for(403, k);
    const int dim = k % 3 ? 4 : 6;
    const auto s = dim == 4 || k % 2 ? random_lcs(rng, dim) : random_hermitian(rng, dim, false);
    const auto geo = geometry_of(s);
    EXPECT_EQ(chern_form(geo).residual, Q(0)) << describe(s);
    if (dim == 4 || geo.lee.exact_solution) EXPECT_EQ(formula_almost_hermitian(geo).residual, Q(0)) << describe(s);
    EXPECT_EQ(lee_normalization(geo).residual, Q(0)) << describe(s);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(bochner_formula(geo, random_vector(rng, dim)).residual, Q(0)) << describe(s);
    if (dim == 4) EXPECT_EQ(dj_theta_duality_dim4(geo).residual, Q(0)) << describe(s);
  }
}

TEST(ConnectionProperty, BochnerOnA41BasisForms) {
  const auto geo = geometry_of(a41());
  for (int i = 0; i < 4; ++i) EXPECT_EQ(bochner_formula(geo, e(4, i)).residual, Q(0));
}

TEST(ConnectionProperty, StarRicciContractedOnUnimodularPluricanonical) {
  int hits = 0;
  for (int k = 0; k < 60; ++k) {
    Rng rng = rng_for(404, k);
    const auto s = build_almost_abelian(random_aa_lcs_params(rng, true));
    const auto geo = geometry_of(s);
    if (!classify_metric(geo).pluricanonical) continue;
    ++hits;
    EXPECT_EQ(bilinear(geo.lee.T_field, geo.rho_star, geo.lee.JT), Q(0)) << describe(s);
  }
  EXPECT_GE(hits, 5);
}

TEST(ConnectionFloat, StarRicciIsFrameIndependent) {
  for (int k = 0; k < 10; ++k) {
    Rng rng = rng_for(405, k);
    const auto exact = random_hermitian(rng, k % 2 ? 4 : 6, false);
    const auto s = to_float(exact);
    const auto geo = analyze(s);
    const std::vector<Vector<double>> seeds1;
    const std::vector<Vector<double>> seeds2 = {vector_cast<double>(random_vector(rng, s.dim())),
                                                vector_cast<double>(random_vector(rng, s.dim()))};
    const auto a = star_ricci_in_frame(s, geo.curv, seeds1);
    const auto b = star_ricci_in_frame(s, geo.curv, seeds2);
    const double scale = std::max(1.0, max_abs(geo.rho_star));
    EXPECT_LE(max_abs(a - geo.rho_star), 1e-9 * scale);
    EXPECT_LE(max_abs(b - geo.rho_star), 1e-9 * scale);
    // The frame is orthonormal and J-adapted.
    const auto frame = unitary_frame(s, seeds2);
    for (std::size_t i = 0; i < frame.size(); ++i)
      for (std::size_t j = 0; j < frame.size(); ++j)
        EXPECT_NEAR(s.inner(frame[i], frame[j]), i == j ? 1.0 : 0.0, 1e-9);
  }
}

TEST(ConnectionFloat, ExactAndFloatAgree) {
  const auto exact = analyze(a48());
  const auto fl = analyze(to_float(a48()));
  EXPECT_LE(max_abs(matrix_cast<double>(exact.rho_star) - fl.rho_star), 1e-12);
}
