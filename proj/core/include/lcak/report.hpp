#pragma once

// Report assembly and deterministic JSON serialization. Scalars are stored as
// text: exact values as fractions ("1/4"), floats as the shortest decimal that
// round-trips. Keys are emitted in a fixed order so reports can be diffed.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcak/almost_abelian.hpp"

namespace lcak {

inline constexpr const char* kVersion = "0.3.0";

// Sign and normalization conventions, printed by --version and stored in
// every report.
std::vector<std::pair<std::string, std::string>> convention_metadata();

struct ReportResidual {
  std::string name;
  std::string value;
  std::string scale;
  bool holds = true;
  bool operator==(const ReportResidual&) const = default;
};

struct ReportEquivalence {
  std::string name;
  bool applicable = false;
  bool lhs = false;
  bool rhs = false;
  bool operator==(const ReportEquivalence&) const = default;
};

struct ReportFeasibility {
  std::string status;
  std::string optimum;
  int subspace_dim = 0;
  std::string scope;
  std::string certificate;
  std::map<std::string, std::string> witness;  // "13" -> coefficient of e^{13}
  bool operator==(const ReportFeasibility&) const = default;
};

struct ReportClassification {
  std::string label;
  std::string jordan;
  std::string b_dot_v;
  bool agree = false;
  std::string error;  // set when the preconditions fail
  bool operator==(const ReportClassification&) const = default;
};

struct Report {
  std::string name;
  std::string mode;
  double tolerance = kDefaultTolerance;
  int dim = 0;
  std::vector<std::pair<std::string, std::string>> metadata;

  std::vector<std::pair<std::string, bool>> flags;
  std::string kind;

  std::vector<std::string> theta;
  std::vector<std::string> lee_field;
  std::vector<std::string> characteristic_field;
  std::map<std::string, std::string> F;
  std::map<std::string, std::string> dF;
  std::map<std::string, std::vector<std::string>> nijenhuis;  // "1,2" -> N(e1, e2)
  std::vector<std::vector<std::string>> image_of_N;
  std::vector<std::vector<std::string>> D_theta_sym;
  std::vector<std::vector<std::string>> rho_star;
  std::optional<std::vector<std::string>> automorphism_T;

  std::vector<ReportResidual> residuals;
  std::vector<ReportResidual> identities;
  std::vector<ReportEquivalence> equivalences;
  std::vector<std::string> warnings;
  std::optional<ReportFeasibility> feasibility;
  std::optional<ReportClassification> classification;

  bool flag(const std::string& key) const;
  // No implication warnings, every equivalence consistent, every identity holds.
  bool consistent() const;

  bool operator==(const Report&) const = default;
};

struct ReportOptions {
  bool feasibility = true;
};

template <class T>
Report run_report(const AlmostHermitianStructure<T>& s, const std::string& name,
                  const std::optional<AlmostAbelianParams<T>>& almost_abelian = std::nullopt,
                  const ReportOptions& options = {});

// Recognizes the adapted almost-abelian normal form (g = 1, J e_i = e_{2n-i+1},
// e_1..e_{2n-1} an abelian ideal) and reads off (a, b, v, A).
template <class T>
std::optional<AlmostAbelianParams<T>> detect_almost_abelian(const AlmostHermitianStructure<T>& s);

std::string to_json(const Report& r, int indent = 2);
Report report_from_json(const std::string& text);

}  // namespace lcak
