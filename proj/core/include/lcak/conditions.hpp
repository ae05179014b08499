#pragma once

// Structural conditions on LCS / almost Hermitian Lie algebras and the
// pointwise forms of the theorems relating them.
//
// Residual-to-flag conversion: in exact mode a flag holds iff its residual is
// exactly zero; in float mode iff residual <= tol * max(1, scale), where scale
// is the size of the tensors entering the residual.

#include <optional>
#include <string>
#include <vector>

#include "lcak/identities.hpp"

namespace lcak {

template <class T>
struct Residual {
  std::string name;
  T value{0};
  T scale{0};
};

template <class T>
bool vanishes(const Residual<T>& r, double tol);

template <class T>
struct LcsCheck {
  bool is_lcs = false;
  bool lee_closed = false;
  Vector<T> theta;
  T df_residual{0};      // max |dF - theta ^ F|
  T dtheta_residual{0};  // max |d theta|
};

template <class T>
LcsCheck<T> check_lcs(const AlmostHermitianStructure<T>& s);

enum class LcsKind { First, Second, Undetermined };
const char* to_string(LcsKind kind);

template <class T>
struct AutomorphismAlgebra {
  std::vector<Vector<T>> basis;  // basis of {X : L_X F = 0}
  Vector<T> lee_morphism;        // theta(X_i)
  LcsKind kind = LcsKind::Undetermined;
};

template <class T>
AutomorphismAlgebra<T> automorphism_algebra(const AlmostHermitianStructure<T>& s,
                                            const Vector<T>& theta);

template <class T>
struct FirstKindCheck {
  bool first_kind = false;
  AutomorphismAlgebra<T> automorphisms;
  Vector<T> T_candidate;  // minimal g-norm automorphism with theta(T) = 1
  Vector<T> eta;          // -iota_T F
  T f1stkind_residual{0}; // max |F - (d eta - theta ^ eta)|
};

// Throws NotLCS when the structure is not LCS.
template <class T>
FirstKindCheck<T> check_first_kind(const AlmostHermitianStructure<T>& s);

template <class T>
struct AdaptedCheck {
  bool adapted = false;                  // for the given metric
  bool adapted_up_to_homothety = false;  // after rescaling (F, g) by |theta|^2
  T homothety_factor{1};
  T j_theta_plus_eta{0};      // |J theta + eta|
  T jv_minus_t{0};            // |JV - T|
  T splitting_residual{0};    // J preserves H and Span(T, V)
  bool h_form_positive = false;  // d eta(., J.) positive definite on H
  T orthonormality_residual{0};  // g-orthogonal splitting with T, V orthonormal
  Vector<T> T_candidate;
  Vector<T> V;
  std::vector<Vector<T>> h_basis;
};

// Throws NotFirstKind when no automorphism has theta(T) = 1.
template <class T>
AdaptedCheck<T> check_adapted(const AlmostHermitianStructure<T>& s);

template <class T>
struct ConditionReport {
  bool is_lcs = false;
  bool lee_closed = false;
  bool is_gcs = false;  // theta = 0, the only exact invariant 1-form
  bool is_gauduchon = false;
  bool T_orthogonal_to_imN = false;
  bool dtheta_J_anti_invariant = false;
  bool dtheta_J_invariant = false;
  bool pluricanonical = false;
  bool anti_pluricanonical = false;
  bool vaisman = false;
  bool first_kind = false;
  bool adapted = false;
  bool adapted_up_to_homothety = false;
  bool lee_field_holomorphic = false;
  bool JT_killing = false;
  bool unimodular = false;
  bool integrable = false;
  LcsKind kind = LcsKind::Undetermined;

  LeeData<T> lee;
  std::vector<Residual<T>> residuals;
  std::vector<std::string> warnings;  // failed implications (indicate bugs)

  const Residual<T>* find(const std::string& name) const;
};

template <class T>
ConditionReport<T> classify_metric(const HermitianGeometry<T>& geo);

template <class T>
ConditionReport<T> classify_metric(const AlmostHermitianStructure<T>& s) {
  return classify_metric(analyze(s));
}

template <class T>
struct Equivalence {
  std::string name;
  bool applicable = false;
  bool lhs = false;
  bool rhs = false;
  bool consistent() const { return !applicable || lhs == rhs; }
};

template <class T>
struct TheoremReport {
  std::vector<Equivalence<T>> equivalences;  // (a), (b), (c), (d), (e)
  std::vector<Residual<T>> residuals;
  bool all_consistent() const;
};

// Throws NotLCS when the structure is not LCS.
template <class T>
TheoremReport<T> verify_equivalences(const HermitianGeometry<T>& geo, const ConditionReport<T>& report);

enum class FeasibilityStatus { Feasible, Infeasible, Inconclusive };
const char* to_string(FeasibilityStatus status);

template <class T>
struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::Inconclusive;
  double optimum = 0;         // max of lambda_min over the normalized slice
  int subspace_dim = 0;       // dimension of the candidate space
  std::string scope;          // which candidate space was searched
  std::optional<KForm<T>> witness;
  std::string certificate;    // "", "lee_form_dual", "trace_dual", "numeric_dual"
  double dual_value = 0;      // lambda_min of the normalized dual certificate
};

struct FeasibilityOptions {
  int restarts = 64;
  int iterations = 400;
  unsigned seed = 7;
  double tol = kDefaultTolerance;
};

template <class T>
FeasibilityResult<T> symplectic_feasibility(const AlmostHermitianStructure<T>& s,
                                            const FeasibilityOptions& opts = {});

}  // namespace lcak
