// Acceptance suite: one PASS/FAIL line per criterion.
//
//   lcak_acceptance            run every criterion
//   lcak_acceptance 3 7        run the listed criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcak/catalog.hpp"
#include "lcak/fuzz.hpp"

using namespace lcak;
using Q = Rational;

namespace {

// Tolerances and sample sizes are fixed here, not taken from the command line.
constexpr double kTauExample = 0.0;      // criteria 1, 2: exact equality
constexpr double kTauEquivalence = 1e-9; // criteria 3, 4, 9 (float runs)
constexpr double kTauIdentity = 1e-8;    // criteria 5, 6 (float runs; exact runs demand 0)
constexpr double kTauFeasibility = 1e-9; // criterion 8
constexpr double kMaxSecondsExample = 1.0;
constexpr double kMaxSecondsEquivalence = 30.0;
constexpr double kMaxSecondsIdentity = 120.0;
constexpr int kSamplesC3 = 500;
constexpr int kSamplesC4 = 500;
constexpr int kSamplesC5 = 200;
constexpr int kSamplesC6 = 200;
constexpr int kSamplesC7 = 300;
constexpr int kSamplesC9 = 300;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// Collects failed sub-checks of one criterion.
struct Ledger {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o{failures.empty(), summary};
    for (const auto& f : failures) o.detail += "; FAILED " + f;
    return o;
  }
};

Matrix<Q> sym_entries(int dim, const std::vector<std::tuple<int, int, Q>>& entries) {
  Matrix<Q> m(dim, dim);
  for (const auto& [i, j, v] : entries) {
    m(i, j) += v;
    if (i != j) m(j, i) += v;
  }
  return m;
}

Vector<Q> vec(std::initializer_list<long> xs) {
  Vector<Q> v;
  for (long x : xs) v.push_back(Q(x));
  return v;
}

struct ExampleExpectation {
  std::string name;
  KForm<Q> dF;
  Vector<Q> theta;
  Vector<Q> n12;
  Matrix<Q> dtheta_sym;
  std::optional<std::vector<Vector<Q>>> image_of_N;
};

Outcome check_example(const ExampleExpectation& want) {
  Ledger l;
  Timer timer;
  const auto& s = catalog_entry(want.name).structure;
  const auto geo = analyze(s);
  const auto rep = classify_metric(geo);
  const KForm<Q> dF = d(s.algebra(), s.F());
  const Vector<Q> theta = geo.lee.theta;
  const Vector<Q> n12 = nijenhuis(s, unit_vector<Q>(4, 0), unit_vector<Q>(4, 1));
  const Matrix<Q> sym = symmetric_part(covariant_derivative_one_form(geo.connection, theta));
  std::optional<std::vector<Vector<Q>>> image;
  if (want.image_of_N) image = image_of_N(s);
  const double secs = timer.seconds();

  static_assert(kTauExample == 0.0);
  l.expect(dF == want.dF, "dF");
  l.expect(theta == want.theta, "theta");
  l.expect(n12 == want.n12, "N(e1,e2)");
  l.expect(sym == want.dtheta_sym, "(D theta)^sym");
  if (want.image_of_N) l.expect(*image == span_basis(*want.image_of_N), "image of N");
  l.expect(rep.pluricanonical, "pluricanonical flag");
  l.expect(secs < kMaxSecondsExample, "runtime " + fmt(secs) + " s");
  return l.outcome("exact match of dF, theta, N(e1,e2), (D theta)^sym" +
                   std::string(want.image_of_N ? ", image of N" : "") + ", pluricanonical; " + fmt(secs) + " s");
}

Outcome criterion1() {
  return check_example({"A4_1", KForm<Q>::basis(4, {1, 2, 3}), vec({0, 0, -1, 0}),
                        {Q(0), Q(1) / 4, Q(0), Q(0)}, sym_entries(4, {{1, 3, Q(1) / 2}}), std::nullopt});
}

Outcome criterion2() {
  return check_example({"A4_8", Q(-1) * KForm<Q>::basis(4, {1, 2, 3}), vec({0, 0, 0, -1}),
                        {Q(0), Q(0), Q(1) / 2, Q(0)}, sym_entries(4, {{2, 2, Q(1)}, {1, 1, Q(-1)}}),
                        std::vector<Vector<Q>>{unit_vector<Q>(4, 1), unit_vector<Q>(4, 2)}});
}

// Almost-abelian dimension-4 LCS sample, written in a random basis half of the time.
AlmostHermitianStructure<Q> aa_sample(Rng& rng, bool unimodular) {
  const auto p = random_aa_lcs_params(rng, unimodular);
  const auto s = build_almost_abelian(p);
  return std::uniform_int_distribution<int>(0, 1)(rng) ? transform(s, random_basis_change(rng, 4)) : s;
}

bool coin(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

template <class T>
bool theta_nonzero(const HermitianGeometry<T>& geo, double tol) {
  return !is_zero_vector(geo.lee.theta, tol);
}

// (first kind and adapted) against pluricanonical; nullopt when theta = 0.
template <class T>
std::optional<bool> c3_agree(const AlmostHermitianStructure<T>& s, double tol) {
  const auto geo = analyze(s);
  if (!theta_nonzero(geo, tol)) return std::nullopt;
  const auto rep = classify_metric(geo);
  const auto fk = check_first_kind(s);
  const bool rhs = fk.first_kind && check_adapted(s).adapted_up_to_homothety;
  return rep.pluricanonical == rhs;
}

Outcome criterion3() {
  Ledger l;
  Timer timer;
  int evaluated = 0, skipped = 0, positives = 0, exact_bad = 0, float_bad = 0;
  for (const char* name : {"A4_1", "A4_8"}) {
    const auto& s = catalog_entry(name).structure;
    l.expect(c3_agree(s, 0).value_or(false), std::string(name) + " (exact)");
    l.expect(c3_agree(s.cast<double>(), kTauEquivalence).value_or(false), std::string(name) + " (float)");
  }
  for (std::uint64_t k = 0; evaluated < kSamplesC3 && k < 20 * kSamplesC3; ++k) {
    Rng rng(sample_seed(kSeed + 3, k));
    const auto s = aa_sample(rng, coin(rng));
    const auto exact = c3_agree(s, 0);
    if (!exact) {
      ++skipped;
      continue;
    }
    ++evaluated;
    positives += classify_metric(s).pluricanonical;
    exact_bad += !*exact;
    auto sd = AlmostHermitianStructure<double>(s.algebra().cast<double>(), matrix_cast<double>(s.J()),
                                               matrix_cast<double>(s.g()), kTauEquivalence);
    float_bad += !c3_agree(sd, kTauEquivalence).value_or(false);
  }
  const double secs = timer.seconds();
  l.expect(evaluated >= kSamplesC3, "only " + std::to_string(evaluated) + " samples");
  l.expect(exact_bad == 0, std::to_string(exact_bad) + " exact disagreements");
  l.expect(float_bad == 0, std::to_string(float_bad) + " float disagreements at tau 1e-9");
  l.expect(secs < kMaxSecondsEquivalence, "runtime " + fmt(secs) + " s");
  return l.outcome("A4_1, A4_8 + " + std::to_string(evaluated) + " almost-abelian samples (" +
                   std::to_string(positives) + " pluricanonical, " + std::to_string(skipped) +
                   " theta = 0 skipped), disagreements exact " + std::to_string(exact_bad) + ", float " +
                   std::to_string(float_bad) + "; " + fmt(secs) + " s");
}

// Unimodular LCS structures: almost-abelian data in random bases, and
// R + (unimodular contact algebra) from the general LCS generator.
std::optional<AlmostHermitianStructure<Q>> unimodular_lcs_sample(Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) < 6) return aa_sample(rng, true);
  const int dim = coin(rng) ? 4 : 6;
  auto s = random_lcs(rng, dim);
  if (!is_unimodular(s.algebra()).unimodular) return std::nullopt;
  return s;
}

template <class T>
std::optional<bool> c4_agree(const AlmostHermitianStructure<T>& s, double tol, bool* positive = nullptr) {
  const auto geo = analyze(s);
  const Vector<T>& t = geo.lee.T_field;
  if (!is_zero(orthogonality_to_image_of_N(s, t), tol)) return std::nullopt;
  const auto rep = classify_metric(geo);
  if (!rep.is_lcs || !rep.unimodular) return std::nullopt;
  const Vector<T> jt = s.apply_J(t);
  const T bracket = s.inner(s.algebra().bracket(t, jt), jt);
  const bool rhs = is_zero(bracket, tol);
  if (positive) *positive = rep.pluricanonical;
  return rep.pluricanonical == rhs;
}

Outcome criterion4() {
  Ledger l;
  Timer timer;
  int evaluated = 0, positives = 0, exact_bad = 0, float_bad = 0, float_skipped = 0;
  std::uint64_t drawn = 0;
  for (std::uint64_t k = 0; evaluated < kSamplesC4 && k < 40 * kSamplesC4; ++k) {
    Rng rng(sample_seed(kSeed + 4, k));
    const auto s = unimodular_lcs_sample(rng);
    ++drawn;
    if (!s) continue;
    bool positive = false;
    const auto exact = c4_agree(*s, 0, &positive);
    if (!exact) continue;
    ++evaluated;
    positives += positive;
    exact_bad += !*exact;
    const auto fl = c4_agree(s->cast<double>(), kTauEquivalence);
    if (!fl)
      ++float_skipped;
    else
      float_bad += !*fl;
  }
  const double secs = timer.seconds();
  l.expect(evaluated >= kSamplesC4, "only " + std::to_string(evaluated) + " samples");
  l.expect(exact_bad == 0, std::to_string(exact_bad) + " exact disagreements");
  l.expect(float_bad == 0, std::to_string(float_bad) + " float disagreements");
  l.expect(float_skipped == 0, std::to_string(float_skipped) + " samples lost the hypothesis in float mode");
  return l.outcome(std::to_string(evaluated) + " unimodular LCS samples with T orthogonal to im N (" +
                   std::to_string(positives) + " pluricanonical; " + std::to_string(drawn) +
                   " drawn), disagreements exact " + std::to_string(exact_bad) + ", float " +
                   std::to_string(float_bad) + "; " + fmt(secs) + " s");
}

Outcome criterion5() {
  Ledger l;
  Timer timer;
  // Identity name -> minimum number of evaluations.
  const std::vector<std::pair<std::string, int>> required = {
      {"formula_almost_hermitian", kSamplesC5}, {"dj_expression", kSamplesC5},
      {"chern_form", kSamplesC5},               {"bochner_formula", 10 * kSamplesC5},
      {"j_invariant_wedge", kSamplesC5},        {"cyclic_nijenhuis", kSamplesC5},
  };
  std::ostringstream summary;
  for (ArithmeticMode mode : {ArithmeticMode::Exact, ArithmeticMode::Float}) {
    std::map<std::string, FuzzCheckStats> total;
    std::vector<FuzzFailure> failures;
    for (auto family : {FuzzFamily::RandomHermitian, FuzzFamily::RandomUnimodular, FuzzFamily::AlmostAbelian4d}) {
      FuzzOptions o;
      o.seed = kSeed + 5;
      o.count = kSamplesC5;
      o.family = family;
      o.mode = mode;
      o.tolerance = kTauIdentity;
      const auto s = fuzz(o);
      for (const auto& c : s.checks) {
        auto& t = total[c.name];
        t.name = c.name;
        t.applicable += c.applicable;
        t.passed += c.passed;
      }
      failures.insert(failures.end(), s.identity_failures.begin(), s.identity_failures.end());
    }
    summary << (mode == ArithmeticMode::Exact ? "exact:" : " float:");
    for (const auto& [name, min] : required) {
      const auto& t = total[name];
      summary << " " << name << " " << t.passed << "/" << t.applicable;
      l.expect(t.applicable >= min, std::string(to_string(mode)) + " " + name + " evaluated only " +
                                        std::to_string(t.applicable) + " times");
      l.expect(t.passed == t.applicable, std::string(to_string(mode)) + " " + name + " failed " +
                                             std::to_string(t.applicable - t.passed) + " times");
    }
    for (const auto& f : failures)
      for (const auto& [name, min] : required)
        if (f.check == name) std::cerr << "  identity failure: " << f.check << " " << f.residual << " | " << f.structure << "\n";
  }
  const double secs = timer.seconds();
  l.expect(secs < kMaxSecondsIdentity, "runtime " + fmt(secs) + " s");
  return l.outcome(summary.str() + "; " + fmt(secs) + " s");
}

template <class T>
std::pair<bool, std::string> c6_holds(const AlmostHermitianStructure<T>& s, double tol) {
  const auto geo = analyze(s);
  const auto di = dim4_integrand(geo);
  const T scale = std::max({abs_value(di.nijenhuis_term), abs_value(di.hessian_term), abs_value(di.bracket_term),
                            abs_value(T(di.delta_theta * di.delta_theta)), T(1)});
  IdentityResidual<T> r{"dim4_integrand", abs_value(di.value), scale, true};
  return {r.holds(tol), to_string(di.value)};
}

Outcome criterion6() {
  Ledger l;
  Timer timer;
  int evaluated = 0, lcs = 0, exact_bad = 0, float_bad = 0;
  for (int k = 0; k < kSamplesC6 + 50; ++k) {
    Rng rng(sample_seed(kSeed + 6, k));
    const auto s = random_hermitian(rng, 4, true);
    ++evaluated;
    lcs += check_lcs(s).is_lcs;
    const auto [ok, value] = c6_holds(s, 0);
    const auto [fok, fvalue] = c6_holds(s.cast<double>(), kTauIdentity);
    if (!ok) std::cerr << "  integrand " << value << " (exact) | " << describe(s) << "\n";
    if (!fok) std::cerr << "  integrand " << fvalue << " (float) | " << describe(s) << "\n";
    exact_bad += !ok;
    float_bad += !fok;
  }
  const double secs = timer.seconds();
  l.expect(evaluated >= kSamplesC6, "only " + std::to_string(evaluated) + " samples");
  l.expect(exact_bad == 0, std::to_string(exact_bad) + " exact violations");
  l.expect(float_bad == 0, std::to_string(float_bad) + " float violations");
  return l.outcome(std::to_string(evaluated) + " unimodular dim-4 structures (" + std::to_string(lcs) +
                   " LCS), violations exact " + std::to_string(exact_bad) + ", float " + std::to_string(float_bad) +
                   "; " + fmt(secs) + " s");
}

Outcome criterion7() {
  Ledger l;
  Timer timer;
  const std::set<ClassKind> allowed{ClassKind::A_4_1, ClassKind::A_3_4_plus_A1, ClassKind::A_3_6_plus_A1};
  int count[3] = {0, 0, 0}, wrong_label = 0, jordan_mismatch = 0;
  for (int k = 0; k < kSamplesC7; ++k) {
    Rng rng(sample_seed(kSeed + 7, k));
    const int sign = k % 3 - 1;
    const auto p = random_aa_classification_params(rng, sign);
    const auto c = classify_4d(p);
    const ClassKind expected =
        sign > 0 ? ClassKind::A_3_4_plus_A1 : sign < 0 ? ClassKind::A_3_6_plus_A1 : ClassKind::A_4_1;
    ++count[sign + 1];
    if (!allowed.count(c.label.kind) || c.label.kind != expected) {
      ++wrong_label;
      std::cerr << "  label " << c.label.str() << " for b.v = " << to_string(c.b_dot_v) << "\n";
    }
    if (!c.agree()) {
      ++jordan_mismatch;
      std::cerr << "  jordan " << c.jordan.str() << " vs " << c.label.str() << "\n";
    }
  }
  const double secs = timer.seconds();
  l.expect(wrong_label == 0, std::to_string(wrong_label) + " wrong labels");
  l.expect(jordan_mismatch == 0, std::to_string(jordan_mismatch) + " Jordan mismatches");
  return l.outcome(std::to_string(kSamplesC7) + " inputs (b.v < 0: " + std::to_string(count[0]) +
                   ", = 0: " + std::to_string(count[1]) + ", > 0: " + std::to_string(count[2]) +
                   "), wrong labels " + std::to_string(wrong_label) + ", Jordan mismatches " +
                   std::to_string(jordan_mismatch) + "; " + fmt(secs) + " s");
}

Outcome criterion8() {
  Ledger l;
  std::ostringstream summary;
  FeasibilityOptions opts;
  opts.tol = kTauFeasibility;
  for (const char* name : {"A4_1", "A4_8"}) {
    const auto r = symplectic_feasibility(catalog_entry(name).structure, opts);
    summary << name << ": " << to_string(r.status) << " (optimum " << r.optimum << ", certificate "
            << r.certificate << "); ";
    l.expect(r.status == FeasibilityStatus::Infeasible, std::string(name) + " status " + to_string(r.status));
    l.expect(r.optimum <= -kTauFeasibility, std::string(name) + " optimum " + fmt(r.optimum) + " > -tau");
  }
  const auto& kahler = catalog_entry("abelian_kahler").structure;
  const auto r = symplectic_feasibility(kahler, opts);
  summary << "abelian_kahler: " << to_string(r.status) << (r.witness && *r.witness == kahler.F() ? ", witness F" : "");
  l.expect(r.status == FeasibilityStatus::Feasible, "abelian_kahler status");
  l.expect(r.witness && *r.witness == kahler.F(), "abelian_kahler witness is not F");
  return l.outcome(summary.str());
}

template <class T>
bool c9_agree(const AlmostHermitianStructure<T>& s, double tol, bool* positive = nullptr) {
  const auto geo = analyze(s);
  const auto rep = classify_metric(geo);
  const bool rhs = is_zero(max_abs(lie_derivative_J(s, geo.lee.T_field)), tol);
  if (positive) *positive = rep.anti_pluricanonical;
  return rep.anti_pluricanonical == rhs;
}

Outcome criterion9() {
  Ledger l;
  Timer timer;
  int evaluated = 0, positives = 0, exact_bad = 0, float_bad = 0;
  for (int k = 0; k < kSamplesC9; ++k) {
    Rng rng(sample_seed(kSeed + 9, k));
    const int pick = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto s = pick == 0 ? aa_sample(rng, coin(rng)) : random_lcs(rng, pick == 1 ? 4 : 6);
    bool positive = false;
    ++evaluated;
    exact_bad += !c9_agree(s, 0, &positive);
    positives += positive;
    float_bad += !c9_agree(s.cast<double>(), kTauEquivalence);
  }
  const double secs = timer.seconds();
  l.expect(exact_bad == 0, std::to_string(exact_bad) + " exact disagreements");
  l.expect(float_bad == 0, std::to_string(float_bad) + " float disagreements");
  return l.outcome(std::to_string(evaluated) + " LCS samples (" + std::to_string(positives) +
                   " anti-pluricanonical), disagreements exact " + std::to_string(exact_bad) + ", float " +
                   std::to_string(float_bad) + "; " + fmt(secs) + " s");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"A4_1 example reproduced exactly", criterion1},
      {"A4_8 example reproduced exactly", criterion2},
      {"pluricanonical iff first kind and adapted", criterion3},
      {"unimodular criterion g([T,JT],JT) = 0", criterion4},
      {"identity fuzzing", criterion5},
      {"dimension-4 unimodular integrand vanishes", criterion6},
      {"almost-abelian classification by sign of b.v", criterion7},
      {"symplectic infeasibility over invariant forms", criterion8},
      {"anti-pluricanonical iff L_T J = 0", criterion9},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion '" << argv[i] << "'\n";
      return 2;
    }
    selected.insert(k);
  }
  if (selected.empty())
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.insert(k);

  bool all = true;
  for (int k : selected) {
    const auto& [title, run] = criteria[k - 1];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " | " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
