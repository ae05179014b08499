#include "oracles.hpp"
#include "test_support.hpp"

using namespace lcak;
using namespace lcak::test;

namespace {

AlmostAbelianParams<Q> params(const char* a, std::initializer_list<const char*> b, std::initializer_list<const char*> v,
                              std::initializer_list<std::initializer_list<const char*>> A = {{"0", "0"}, {"0", "0"}}) {
  return {2, q(a), vec(b), vec(v), mat(A)};
}

const char* eigen_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::A_4_1: return "A4_1";
    case ClassKind::A_3_4_plus_A1: return "A3_4+A1";
    case ClassKind::A_3_6_plus_A1: return "A3_6+A1";
    case ClassKind::Abelian: return "abelian";
    case ClassKind::Other: return "other";
  }
  return "other";
}

ErrorCode code_of(const AlmostAbelianParams<Q>& p) {
  try {
    classify_4d(p);
  } catch (const Error& err) {
    return err.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::ValidationError;
}

}  // namespace

TEST(AlmostAbelian, BuildsAdaptedStructure) {
  const auto s = build_almost_abelian(params("0", {"1", "0"}, {"0", "1"}));
  EXPECT_EQ(s.g(), Matrix<Q>::identity(4));
  EXPECT_EQ(s.apply_J(e(4, 0)), e(4, 3));
  EXPECT_EQ(s.apply_J(e(4, 1)), e(4, 2));
  // F = e^{14} + e^{23}.
  EXPECT_EQ(s.F(), KForm<Q>::basis(4, {0, 3}) + KForm<Q>::basis(4, {1, 2}));
  const auto& alg = s.algebra();
  EXPECT_EQ(alg.bracket_basis(3, 1), e(4, 0));
  EXPECT_EQ(alg.bracket_basis(3, 0), e(4, 2));
  EXPECT_TRUE(is_zero_vector(alg.bracket_basis(0, 1)));
  EXPECT_EQ(validate_lie_algebra(alg).jacobi_residual, Q(0));
}

TEST(AlmostAbelian, NilpotentExampleIsA41) {
  const auto p = params("0", {"1", "0"}, {"0", "1"});
  const auto ad = ad_block(p);
  EXPECT_NE(ad * ad, Matrix<Q>(3, 3));
  EXPECT_EQ(ad * ad * ad, Matrix<Q>(3, 3));
  const auto c = classify_4d(p);
  EXPECT_EQ(c.label.kind, ClassKind::A_4_1);
  EXPECT_TRUE(c.agree());
  EXPECT_EQ(c.label.nilpotency_index, 3);
}

TEST(AlmostAbelian, ZeroDataIsAbelian) {
  const auto p = AlmostAbelianParams<Q>::zero(2);
  EXPECT_TRUE(almost_abelian_algebra(p).is_abelian());
  EXPECT_EQ(jordan_type(ad_block(p)).kind, ClassKind::Abelian);
  EXPECT_EQ(code_of(p), ErrorCode::Degenerate);
}

TEST(AlmostAbelian, ClassificationExamples) {
  const auto pos = classify_4d(params("0", {"1", "0"}, {"1", "0"}));
  EXPECT_EQ(pos.b_dot_v, Q(1));
  EXPECT_EQ(pos.label.kind, ClassKind::A_3_4_plus_A1);
  EXPECT_TRUE(pos.agree());
  const auto neg = classify_4d(params("0", {"1", "0"}, {"-1", "0"}));
  EXPECT_EQ(neg.label.kind, ClassKind::A_3_6_plus_A1);
  EXPECT_TRUE(neg.agree());
}

TEST(AlmostAbelian, ZeroBIsHeisenbergNotA41) {
  const auto c = classify_4d(params("0", {"0", "0"}, {"0", "1"}));
  EXPECT_EQ(c.label.kind, ClassKind::Other);
  EXPECT_EQ(c.label.nilpotency_index, 2);
  EXPECT_TRUE(c.agree());
  EXPECT_EQ(oracle::eigen_type(ad_block(params("0", {"0", "0"}, {"0", "1"}))), "h3+R");
}

TEST(AlmostAbelian, ClassificationErrors) {
  EXPECT_EQ(code_of(params("1", {"1", "0"}, {"1", "0"})), ErrorCode::PreconditionFailed);
  EXPECT_EQ(code_of(params("0", {"1", "0"}, {"0", "0"})), ErrorCode::PreconditionFailed);
  EXPECT_EQ(code_of(params("0", {"1", "0"}, {"1", "0"}, {{"1", "0"}, {"0", "-1"}})), ErrorCode::PreconditionFailed);
  EXPECT_EQ(code_of(AlmostAbelianParams<Q>::zero(3)), ErrorCode::UnsupportedDimension);
  EXPECT_THROW(build_almost_abelian(AlmostAbelianParams<Q>{2, Q(0), vec({"1"}), vec({"0", "1"}), Matrix<Q>(2, 2)}),
               Error);
  try {
    pluricanonical_conditions_aa(AlmostAbelianParams<Q>::zero(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::UnsupportedDimension);
  }
}

TEST(AlmostAbelian, LeeFormClosedFormExamples) {
  // A = 0: theta = (Jv)^b.
  const auto p = params("0", {"1", "0"}, {"2", "-1"});
  const auto s = build_almost_abelian(p);
  const Vector<Q> v4 = {Q(0), Q(2), Q(-1), Q(0)};
  EXPECT_EQ(lee_form_aa(p), s.flat(s.apply_J(v4)));
  EXPECT_EQ(lee_form_aa(p), lee_form(s).theta);

  const auto q2 = params("0", {"0", "0"}, {"0", "0"}, {{"1", "0"}, {"0", "1"}});
  EXPECT_EQ(lee_form_aa(q2), -Q(2) * e(4, 3));
  EXPECT_TRUE(is_zero_vector(lee_form_aa(AlmostAbelianParams<Q>::zero(2))));
}

TEST(AlmostAbelian, ConditionSystemExamples) {
  EXPECT_TRUE(pluricanonical_conditions_aa(params("0", {"1", "-2"}, {"3", "1/2"})).all_vanish(0));
  const auto r = pluricanonical_conditions_aa(params("1", {"1", "0"}, {"0", "1"}));
  EXPECT_EQ(r.j_anti_invariance_max(), Q(1));
  const auto s = pluricanonical_conditions_aa(params("0", {"0", "0"}, {"1", "0"}, {{"1", "0"}, {"0", "1"}}));
  EXPECT_EQ(s.dtheta_max(), Q(1));
}

TEST(AlmostAbelianProperty, ConditionSystemsMatchTensorConditions) {
  int pluri = 0;
  for (int k = 0; k < 1000; ++k) {
    Rng rng = rng_for(601, k);
    const auto p = random_aa_lcs_params(rng, true);
    const auto s = build_almost_abelian(p);
    const auto r = classify_metric(s);
    ASSERT_TRUE(r.is_lcs);
    const bool systems = pluricanonical_conditions_aa(p).all_vanish(0);
    EXPECT_EQ(systems, r.pluricanonical) << describe(s);
    pluri += r.pluricanonical;
  }
  EXPECT_GT(pluri, 100);
  EXPECT_LT(pluri, 900);
}

TEST(AlmostAbelianProperty, LeeFormClosedFormAgreesWithSolve) {
  for (int k = 0; k < 100; ++k) {
    Rng rng = rng_for(602, k);
    const auto p = random_aa_lcs_params(rng, k % 2 == 0);
    EXPECT_EQ(lee_form_aa(p), lee_form(build_almost_abelian(p)).theta);
  }
}

TEST(AlmostAbelianProperty, LabelInvariantUnderScalingAndRotation) {
  const Matrix<Q> rot = mat({{"3/5", "-4/5"}, {"4/5", "3/5"}});
  const Matrix<Q> j1 = mat({{"0", "-1"}, {"1", "0"}});
  ASSERT_EQ(rot * j1, j1 * rot);
  for (int k = 0; k < 90; ++k) {
    Rng rng = rng_for(603, k);
    const auto p = random_aa_classification_params(rng, k % 3 - 1);
    const auto base = classify_4d(p);
    auto scaled = p;
    const Q t = Q(1 + k % 4) / 3;
    scaled.b = t * p.b;
    scaled.v = t * p.v;
    EXPECT_EQ(classify_4d(scaled).label, base.label);
    auto rotated = p;
    rotated.b = rot * p.b;
    rotated.v = rot * p.v;
    EXPECT_EQ(classify_4d(rotated).label, base.label);
  }
}

TEST(AlmostAbelianProperty, LabelMatchesEigenvalueOracle) {
  for (int k = 0; k < 150; ++k) {
    Rng rng = rng_for(604, k);
    const int sign = k % 3 - 1;
    const auto p = random_aa_classification_params(rng, sign);
    const auto c = classify_4d(p);
    EXPECT_TRUE(c.agree()) << c.label.str() << " vs " << c.jordan.str();
    EXPECT_EQ(oracle::eigen_type(ad_block(p)), eigen_name(c.label.kind));
    const ClassKind expected = sign > 0 ? ClassKind::A_3_4_plus_A1 : sign < 0 ? ClassKind::A_3_6_plus_A1 : ClassKind::A_4_1;
    EXPECT_EQ(c.label.kind, expected);
  }
}

TEST(AlmostAbelianFloat, ClassifiesScaledData) {
  AlmostAbelianParams<double> p{2, 0.0, {1e-3, 0.0}, {2e3, 0.0}, Matrix<double>(2, 2)};
  EXPECT_EQ(classify_4d(p).label.kind, ClassKind::A_3_4_plus_A1);
  p.v = {-2e3, 0.0};
  EXPECT_EQ(classify_4d(p).label.kind, ClassKind::A_3_6_plus_A1);
}
