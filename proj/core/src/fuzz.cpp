#include "lcak/fuzz.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace lcak {

namespace {

using Q = Rational;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

Q nonzero_small(Rng& rng, int range = 2) {
  Q x(0);
  while (x == 0) x = random_small(rng, range);
  return x;
}

LieAlgebra<Q> from_list(int dim, const std::vector<std::tuple<int, int, int, Q>>& bs) {
  std::vector<StructureConstant<Q>> cs;
  for (const auto& [i, j, k, v] : bs) cs.push_back({i, j, k, v});
  return LieAlgebra<Q>::from_constants(dim, cs);
}

LieAlgebra<Q> direct_sum(const LieAlgebra<Q>& a, const LieAlgebra<Q>& b) {
  std::vector<StructureConstant<Q>> cs = a.sparse();
  for (auto c : b.sparse()) cs.push_back({c.i + a.dim(), c.j + a.dim(), c.k + a.dim(), c.value});
  return LieAlgebra<Q>::from_constants(a.dim() + b.dim(), cs);
}

LieAlgebra<Q> abelian(int dim) { return LieAlgebra<Q>(dim); }

enum class Three { Su2, Sl2, H3, R3 };

// A 3-dimensional algebra together with a contact form on it.
struct ThreeDim {
  LieAlgebra<Q> alg;
  Vector<Q> contact;
};

ThreeDim three_dim(Three kind, const Q& lambda) {
  switch (kind) {
    case Three::Su2:
      return {from_list(3, {{0, 1, 2, Q(1)}, {1, 2, 0, Q(1)}, {2, 0, 1, Q(1)}}), {Q(0), Q(0), Q(1)}};
    case Three::Sl2:
      return {from_list(3, {{0, 1, 1, Q(2)}, {0, 2, 2, Q(-2)}, {1, 2, 0, Q(1)}}), {Q(1), Q(0), Q(0)}};
    case Three::H3:
      return {from_list(3, {{0, 1, 2, Q(1)}}), {Q(0), Q(0), Q(1)}};
    case Three::R3:
      return {from_list(3, {{2, 0, 0, Q(1)}, {2, 1, 1, lambda}}), {Q(1), Q(1), Q(0)}};
  }
  return {abelian(3), {}};
}

ThreeDim random_three(Rng& rng, bool unimodular) {
  const auto kind = static_cast<Three>(uniform(rng, 0, 3));
  Q lambda(-1);
  if (!unimodular)
    while (lambda == 1 || lambda == -1) lambda = random_small(rng, 2);
  return three_dim(kind, lambda);
}

LieAlgebra<Q> aff() { return from_list(2, {{0, 1, 1, Q(1)}}); }

LieAlgebra<Q> almost_abelian_random(Rng& rng, int dim, bool unimodular) {
  Matrix<Q> m(dim - 1, dim - 1);
  for (int i = 0; i < dim - 1; ++i)
    for (int j = 0; j < dim - 1; ++j)
      if (coin(rng)) m(i, j) = random_small(rng, 2);
  if (unimodular) m(0, 0) -= m.trace();
  std::vector<StructureConstant<Q>> cs;
  for (int i = 0; i < dim - 1; ++i)
    for (int j = 0; j < dim - 1; ++j)
      if (m(i, j) != 0) cs.push_back({dim - 1, j, i, m(i, j)});
  return LieAlgebra<Q>::from_constants(dim, cs);
}

LieAlgebra<Q> two_step_nilpotent(Rng& rng, int dim) {
  const int center = dim == 4 ? 1 : uniform(rng, 1, 2);
  std::vector<StructureConstant<Q>> cs;
  for (int i = 0; i < dim - center; ++i)
    for (int j = i + 1; j < dim - center; ++j)
      for (int k = dim - center; k < dim; ++k)
        if (coin(rng)) cs.push_back({i, j, k, random_small(rng, 2)});
  return LieAlgebra<Q>::from_constants(dim, cs);
}

// Symplectic basis of a nondegenerate 2-form, as the columns of the result.
Matrix<Q> symplectic_basis(const Matrix<Q>& f) {
  const int dim = f.rows();
  std::vector<Vector<Q>> rest;
  for (int i = 0; i < dim; ++i) rest.push_back(unit_vector<Q>(dim, i));
  std::vector<Vector<Q>> out;
  while (!rest.empty()) {
    const Vector<Q> u = rest.front();
    rest.erase(rest.begin());
    std::size_t w_at = rest.size();
    for (std::size_t k = 0; k < rest.size(); ++k)
      if (bilinear(u, f, rest[k]) != 0) {
        w_at = k;
        break;
      }
    if (w_at == rest.size()) fail(ErrorCode::NondegeneracyFailure, "symplectic_basis: degenerate form");
    Vector<Q> w = rest[w_at];
    rest.erase(rest.begin() + w_at);
    w = (Q(1) / bilinear(u, f, w)) * w;
    for (auto& x : rest) x = x - bilinear(x, f, w) * u + bilinear(x, f, u) * w;
    out.push_back(u);
    out.push_back(w);
  }
  return Matrix<Q>::from_columns(out, dim);
}

// Product of random symplectic transvections x -> x + t F(v, x) v for F standard.
Matrix<Q> random_symplectic(Rng& rng, int dim) {
  Matrix<Q> f(dim, dim);
  for (int k = 0; k + 1 < dim; k += 2) {
    f(k, k + 1) = Q(1);
    f(k + 1, k) = Q(-1);
  }
  Matrix<Q> s = Matrix<Q>::identity(dim);
  const int steps = uniform(rng, 1, 3);
  for (int step = 0; step < steps; ++step) {
    Vector<Q> v(dim, Q(0));
    for (int k = 0; k < 2; ++k) v[uniform(rng, 0, dim - 1)] = random_small(rng, 1);
    const Q t = random_small(rng, 1);
    Matrix<Q> tv = Matrix<Q>::identity(dim);
    const Vector<Q> fv = f.transpose() * v;  // x -> F(v, x) = v^T F x
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) tv(i, j) += t * v[i] * fv[j];
    s = s * tv;
  }
  return s;
}

Matrix<Q> standard_J(int dim) {
  Matrix<Q> j(dim, dim);
  for (int k = 0; k + 1 < dim; k += 2) {
    j(k + 1, k) = Q(1);
    j(k, k + 1) = Q(-1);
  }
  return j;
}

// Structure (alg, J, g) with fundamental form F: J compatible with F through
// a random symplectic frame, followed by a random change of basis.
AlmostHermitianStructure<Q> compatible_structure(Rng& rng, const LieAlgebra<Q>& alg, const Matrix<Q>& f) {
  const int dim = alg.dim();
  const Matrix<Q> p = symplectic_basis(f) * random_symplectic(rng, dim);
  const AlmostHermitianStructure<Q> s(alg.change_basis(p), standard_J(dim), Matrix<Q>::identity(dim));
  return transform(s, random_basis_change(rng, dim));
}

// F = d eta - theta ^ eta on R e_0 + h for a contact form eta on h.
Matrix<Q> contact_lcs_form(const LieAlgebra<Q>& alg, const Vector<Q>& eta, const Q& t) {
  const int dim = alg.dim();
  const KForm<Q> e = KForm<Q>::one_form(eta);
  const KForm<Q> theta = KForm<Q>::one_form(t * unit_vector<Q>(dim, 0));
  return (d(alg, e) - wedge(theta, e)).to_matrix();
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_small(Rng& rng, int range) {
  return Q(uniform(rng, -range, range)) / Q(uniform(rng, 1, 2));
}

Vector<Rational> random_vector(Rng& rng, int dim, int range) {
  Vector<Q> v(dim);
  for (auto& x : v) x = random_small(rng, range);
  return v;
}

Matrix<Rational> random_basis_change(Rng& rng, int dim) {
  for (;;) {
    Matrix<Q> p = Matrix<Q>::identity(dim);
    for (int k = 0; k < dim; ++k) p(uniform(rng, 0, dim - 1), uniform(rng, 0, dim - 1)) += random_small(rng, 1);
    if (determinant(p) != 0) return p;
  }
}

template <class T>
AlmostHermitianStructure<T> transform(const AlmostHermitianStructure<T>& s, const Matrix<T>& p) {
  auto pinv = inverse(p, s.tolerance());
  if (!pinv) fail(ErrorCode::Degenerate, "transform: singular basis change");
  return AlmostHermitianStructure<T>(s.algebra().change_basis(p), *pinv * s.J() * p, p.transpose() * s.g() * p,
                                     s.tolerance());
}

LieAlgebra<Rational> random_lie_algebra(Rng& rng, int dim, bool unimodular) {
  const int family = uniform(rng, 0, unimodular ? 3 : 4);
  LieAlgebra<Q> alg;
  switch (family) {
    case 0:
      alg = almost_abelian_random(rng, dim, unimodular);
      break;
    case 1:
      alg = two_step_nilpotent(rng, dim);
      break;
    case 2:
      alg = direct_sum(random_three(rng, unimodular).alg, abelian(dim - 3));
      break;
    case 3:
      alg = dim == 6 ? direct_sum(random_three(rng, unimodular).alg, random_three(rng, unimodular).alg)
                     : direct_sum(random_three(rng, unimodular).alg, abelian(1));
      break;
    default:
      alg = dim == 6 ? direct_sum(direct_sum(aff(), aff()), coin(rng) ? aff() : abelian(2))
                     : direct_sum(aff(), coin(rng) ? aff() : abelian(2));
      break;
  }
  return alg.change_basis(random_basis_change(rng, dim));
}

AlmostHermitianStructure<Rational> random_hermitian(Rng& rng, int dim, bool unimodular) {
  const LieAlgebra<Q> alg = random_lie_algebra(rng, dim, unimodular);
  const AlmostHermitianStructure<Q> s(alg, standard_J(dim), Matrix<Q>::identity(dim));
  return transform(s, random_basis_change(rng, dim));
}

AlmostAbelianParams<Rational> random_aa_lcs_params(Rng& rng, bool unimodular) {
  auto p = AlmostAbelianParams<Q>::zero(2);
  const int stratum = uniform(rng, 0, 3);
  auto nonzero_vec = [&] {
    Vector<Q> v{Q(0), Q(0)};
    while (v[0] == 0 && v[1] == 0) v = random_vector(rng, 2, 2);
    return v;
  };
  switch (stratum) {
    case 0:  // a = 0, A = 0
      p.b = random_vector(rng, 2, 2);
      p.v = nonzero_vec();
      break;
    case 1: {  // A = v w^T keeps d theta = 0
      p.v = nonzero_vec();
      const Vector<Q> w = random_vector(rng, 2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p.A(i, j) = p.v[i] * w[j];
      p.b = random_vector(rng, 2, 2);
      p.a = unimodular ? Q(-p.A.trace()) : (coin(rng) ? Q(0) : random_small(rng, 2));
      break;
    }
    case 2: {  // orthogonality system solved with a != 0
      p.v = nonzero_vec();
      p.a = nonzero_small(rng);
      const Q vv = dot(p.v, p.v);
      if (unimodular) {
        const Q k = random_small(rng, 2);
        p.b = {p.v[0] - k * p.v[1], p.v[1] + k * p.v[0]};  // b.v = |v|^2
      } else {
        p.b = random_vector(rng, 2, 2);
      }
      const Vector<Q> w = (-p.a / vv) * p.b;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p.A(i, j) = p.v[i] * w[j];
      break;
    }
    default: {  // v = 0
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (coin(rng)) p.A(i, j) = random_small(rng, 2);
      p.b = random_vector(rng, 2, 2);
      p.a = unimodular ? Q(-p.A.trace()) : random_small(rng, 2);
      break;
    }
  }
  return p;
}

AlmostAbelianParams<Rational> random_aa_classification_params(Rng& rng, int sign) {
  auto p = AlmostAbelianParams<Q>::zero(2);
  for (;;) {
    p.b = random_vector(rng, 2, 3);
    p.v = random_vector(rng, 2, 3);
    if (sign == 0) p.b = nonzero_small(rng) * Vector<Q>{-p.v[1], p.v[0]};
    if (is_zero_vector(p.b) || is_zero_vector(p.v)) continue;
    const Q bv = dot(p.b, p.v);
    if ((sign > 0 && bv > 0) || (sign < 0 && bv < 0) || (sign == 0 && bv == 0)) return p;
  }
}

AlmostHermitianStructure<Rational> random_lcs(Rng& rng, int dim) {
  const int kind = uniform(rng, 0, 5);
  if (dim == 4 && kind <= 1) {
    const auto p = random_aa_lcs_params(rng, coin(rng));
    const auto s = build_almost_abelian(p);
    if (kind == 0) return transform(s, random_basis_change(rng, dim));
    return compatible_structure(rng, s.algebra(), s.F_matrix());
  }
  if (kind == 5) {
    // theta = 0: a symplectic form.
    if (dim == 4 && coin(rng)) {
      const auto alg = direct_sum(from_list(3, {{0, 1, 2, Q(1)}}), abelian(1));  // h3 + R
      Matrix<Q> f(4, 4);
      f(0, 3) = Q(1), f(3, 0) = Q(-1), f(1, 2) = Q(1), f(2, 1) = Q(-1);
      return compatible_structure(rng, alg, f);
    }
    LieAlgebra<Q> alg = aff();
    while (alg.dim() < dim) alg = direct_sum(alg, aff());
    Matrix<Q> f(dim, dim);
    for (int k = 0; k + 1 < dim; k += 2) f(k, k + 1) = Q(1), f(k + 1, k) = Q(-1);
    return compatible_structure(rng, alg, f);
  }
  // R e_0 + contact algebra.
  LieAlgebra<Q> h;
  Vector<Q> eta;
  if (dim == 4) {
    const ThreeDim t = random_three(rng, coin(rng));
    h = t.alg;
    eta = t.contact;
  } else if (coin(rng)) {
    h = from_list(5, {{0, 1, 4, Q(1)}, {2, 3, 4, Q(1)}});  // h5
    eta = unit_vector<Q>(5, 4);
  } else {
    const ThreeDim t = random_three(rng, coin(rng));
    h = direct_sum(t.alg, aff());
    eta = {t.contact[0], t.contact[1], t.contact[2], Q(0), Q(1)};
  }
  const LieAlgebra<Q> alg = direct_sum(abelian(1), h);
  Vector<Q> eta_full{Q(0)};
  eta_full.insert(eta_full.end(), eta.begin(), eta.end());
  return compatible_structure(rng, alg, contact_lcs_form(alg, eta_full, nonzero_small(rng)));
}

Matrix<Rational> random_j_invariant_form(Rng& rng, const AlmostHermitianStructure<Rational>& s) {
  const int dim = s.dim();
  Matrix<Q> m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = random_small(rng, 2);
      m(j, i) = -m(i, j);
    }
  return j_invariant_part(s, m);
}

const char* to_string(FuzzFamily family) {
  switch (family) {
    case FuzzFamily::AlmostAbelian4d: return "almost_abelian_4d";
    case FuzzFamily::RandomUnimodular: return "random_unimodular";
    case FuzzFamily::RandomHermitian: return "random_hermitian";
  }
  return "random_hermitian";
}

std::optional<FuzzFamily> parse_family(std::string_view name) {
  for (auto f : {FuzzFamily::AlmostAbelian4d, FuzzFamily::RandomUnimodular, FuzzFamily::RandomHermitian})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

template <class T>
std::string describe(const AlmostHermitianStructure<T>& s) {
  std::ostringstream os;
  os << "dim " << s.dim() << "; brackets";
  for (const auto& c : s.algebra().sparse())
    os << " [e" << c.i + 1 << ",e" << c.j + 1 << "]+=" << to_string(c.value) << "*e" << c.k + 1;
  auto mat = [&os](const char* name, const Matrix<T>& m) {
    os << "; " << name << " [";
    for (int i = 0; i < m.rows(); ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    }
    os << "]";
  };
  mat("J", s.J());
  mat("g", s.g());
  return os.str();
}

namespace {

struct SampleResult {
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<FuzzFailure> failures;
};

template <class T>
struct Checker {
  const AlmostHermitianStructure<T>& s;
  double tol;
  SampleResult& out;
  int sample;
  std::uint64_t seed;

  void record(const std::string& name, bool ok, const std::string& residual) {
    out.checks.emplace_back(name, ok);
    if (!ok) out.failures.push_back({sample, seed, name, residual, describe(s)});
  }
  void identity(const IdentityResidual<T>& r, bool applicable = true) {
    if (!applicable || !r.applicable) return;
    record(r.name, r.holds(tol), to_string(r.residual));
  }
  void residual(const std::string& name, const T& value, const T& scale) {
    IdentityResidual<T> r{name, value, scale, true};
    record(name, r.holds(tol), to_string(value));
  }
};

template <class T>
void run_checks(const AlmostHermitianStructure<T>& s, const AlmostHermitianStructure<Q>& exact, Rng& rng, double tol,
                int sample, std::uint64_t seed, const std::optional<AlmostAbelianParams<T>>& aa, SampleResult& out) {
  Checker<T> c{s, tol, out, sample, seed};
  const auto& alg = s.algebra();
  const int dim = s.dim();
  const auto lv = validate_lie_algebra(alg, tol);
  c.residual("jacobi", lv.jacobi_residual, T(1));

  const KForm<T> a1 = KForm<T>::one_form(vector_cast<T>(random_vector(rng, dim)));
  const KForm<T> a2 = KForm<T>::from_matrix(matrix_cast<T>(random_j_invariant_form(rng, exact)));
  c.residual("d_squared", T(d(alg, d(alg, a1)).max_abs() + d(alg, d(alg, s.F())).max_abs()), T(1));
  c.identity(cartan_formula(alg, a2));

  const HermitianGeometry<T> geo = analyze(s);
  c.residual("levi_civita_koszul", koszul_residual(s, geo.connection), T(1));
  c.residual("levi_civita_torsion", torsion_residual(s, geo.connection), T(1));
  c.residual("levi_civita_metric", metric_residual(s, geo.connection), T(1));
  const auto sym = curvature_symmetries(s, geo.curv);
  c.residual("curvature_symmetries",
             std::max({sym.antisymmetry_xy, sym.antisymmetry_zw, sym.pair_symmetry, sym.bianchi}), T(1));

  const ConditionReport<T> rep = classify_metric(geo);
  const bool lcs = rep.is_lcs;
  c.identity(formula_almost_hermitian(geo), dim == 4 || lcs);
  c.identity(dj_expression(geo), lcs);
  c.identity(chern_form(geo));
  for (int k = 0; k < 10; ++k) {
    auto r = bochner_formula(geo, vector_cast<T>(random_vector(rng, dim)));
    c.identity(r);
  }
  c.identity(j_invariant_wedge(s, matrix_cast<T>(random_j_invariant_form(rng, exact)),
                               matrix_cast<T>(random_j_invariant_form(rng, exact))));
  c.identity(cyclic_nijenhuis(s), lcs);
  c.identity(lie_derivative_nijenhuis(geo));
  c.identity(lee_normalization(geo));
  c.identity(dj_theta_duality_dim4(geo));
  c.identity(unimodular_codifferential(geo));
  if (dim == 4 && rep.unimodular) {
    const auto di = dim4_integrand(geo);
    c.residual("dim4_integrand", abs_value(di.value),
               std::max({abs_value(di.nijenhuis_term), abs_value(di.hessian_term), abs_value(di.bracket_term),
                         T(di.delta_theta * di.delta_theta), T(1)}));
  }
  c.record("implications", rep.warnings.empty(), rep.warnings.empty() ? "" : rep.warnings.front());
  if (lcs) {
    const auto th = verify_equivalences(geo, rep);
    for (const auto& e : th.equivalences)
      if (e.applicable) c.record("equivalence_" + e.name, e.consistent(), e.lhs ? "lhs true" : "lhs false");
  }
  if (aa) {
    const Vector<T> theta = lee_form_aa(*aa);
    c.residual("lee_form_aa", max_abs(Vector<T>(theta - geo.lee.theta)), T(1));
    if (lcs && is_unimodular_aa(*aa, tol)) {
      const bool systems = pluricanonical_conditions_aa(*aa).all_vanish(tol);
      c.record("aa_dual_oracle", systems == rep.pluricanonical, systems ? "systems vanish" : "systems nonzero");
    }
  }
}

}  // namespace

FuzzSummary fuzz(const FuzzOptions& options) {
  FuzzSummary summary;
  summary.options = options;
  const int count = std::max(0, options.count);
  std::vector<SampleResult> results(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      const std::uint64_t seed = sample_seed(options.seed, i);
      Rng rng(seed);
      std::optional<AlmostAbelianParams<Q>> aa;
      AlmostHermitianStructure<Q> s;
      const int dim = uniform(rng, 0, 9) < 7 ? 4 : 6;
      switch (options.family) {
        case FuzzFamily::AlmostAbelian4d:
          aa = random_aa_lcs_params(rng, coin(rng));
          s = build_almost_abelian(*aa);
          break;
        case FuzzFamily::RandomUnimodular:
          s = random_hermitian(rng, dim, true);
          break;
        case FuzzFamily::RandomHermitian:
          s = coin(rng) ? random_lcs(rng, dim) : random_hermitian(rng, dim, false);
          break;
      }
      try {
        if (options.mode == ArithmeticMode::Exact) {
          run_checks<Q>(s, s, rng, options.tolerance, i, seed, aa, results[i]);
        } else {
          auto sd = AlmostHermitianStructure<double>(s.algebra().cast<double>(), matrix_cast<double>(s.J()),
                                                     matrix_cast<double>(s.g()), options.tolerance);
          std::optional<AlmostAbelianParams<double>> aad;
          if (aa) aad = aa->cast<double>();
          run_checks<double>(sd, s, rng, options.tolerance, i, seed, aad, results[i]);
        }
      } catch (const Error& e) {
        results[i].checks.emplace_back("no_exception", false);
        results[i].failures.push_back({i, seed, "no_exception", e.reason() + ": " + e.what(), describe(s)});
      }
    }
  };
  int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  summary.samples = count;
  for (const auto& r : results) {
    for (const auto& [name, ok] : r.checks) {
      auto it = std::find_if(summary.checks.begin(), summary.checks.end(),
                             [&](const FuzzCheckStats& c) { return c.name == name; });
      if (it == summary.checks.end()) it = summary.checks.insert(summary.checks.end(), {name, 0, 0});
      ++it->applicable;
      if (ok) ++it->passed;
    }
    summary.identity_failures.insert(summary.identity_failures.end(), r.failures.begin(), r.failures.end());
  }
  return summary;
}

std::string FuzzSummary::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = lcak::to_string(options.family);
  j["seed"] = options.seed;
  j["count"] = options.count;
  j["mode"] = lcak::to_string(options.mode);
  j["tolerance"] = options.tolerance;
  j["samples"] = samples;
  nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name}, {"applicable", c.applicable}, {"passed", c.passed}});
  j["checks"] = checks_json;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : identity_failures)
    failures.push_back({{"sample", f.sample}, {"seed", f.seed}, {"check", f.check}, {"residual", f.residual},
                        {"structure", f.structure}});
  j["identity_failures"] = failures;
  return j.dump(2);
}

template AlmostHermitianStructure<Rational> transform(const AlmostHermitianStructure<Rational>&, const Matrix<Rational>&);
template AlmostHermitianStructure<double> transform(const AlmostHermitianStructure<double>&, const Matrix<double>&);
template std::string describe(const AlmostHermitianStructure<Rational>&);
template std::string describe(const AlmostHermitianStructure<double>&);

}  // namespace lcak
