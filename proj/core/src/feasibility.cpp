#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "lcak/conditions.hpp"

namespace lcak {

namespace {

using Dense = Eigen::MatrixXd;

template <class T>
Dense to_eigen(const Matrix<T>& m) {
  Dense out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

// omega(X, JY) symmetrized.
template <class T>
Matrix<T> pairing(const AlmostHermitianStructure<T>& s, const Matrix<T>& w) {
  const Matrix<T> wj = w * s.J();
  return (wj + wj.transpose()) * frac<T>(1, 2);
}

template <class T>
T frobenius(const Matrix<T>& a, const Matrix<T>& b) {
  T sum(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) sum += a(i, j) * b(i, j);
  return sum;
}

// Symmetric elimination with diagonal pivots; a zero pivot forces a zero row.
template <class T>
bool is_positive_semidefinite(Matrix<T> m, double tol) {
  const int n = m.rows();
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && (p < 0 || m(i, i) > m(p, p))) p = i;
    if (m(p, p) < T(0) && !is_zero(m(p, p), tol)) return false;
    if (is_zero(m(p, p), tol)) {
      for (int i = 0; i < n; ++i)
        if (!done[i] && !is_zero(m(p, i), tol)) return false;
      done[p] = true;
      continue;
    }
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const T f = m(i, p) / m(p, p);
      for (int j = 0; j < n; ++j)
        if (!done[j]) m(i, j) -= f * m(p, j);
    }
  }
  return true;
}

double lambda_min(const Dense& m, Eigen::VectorXd* vec = nullptr) {
  Eigen::SelfAdjointEigenSolver<Dense> es(m);
  if (vec) *vec = es.eigenvectors().col(0);
  return es.eigenvalues()(0);
}

// max lambda_min(sum c_k K_k) subject to sum c_k t_k = 2n by projected
// supergradient ascent.
struct Ascent {
  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd c;
};

Ascent ascend(const std::vector<Dense>& k, const Eigen::VectorXd& t, double target,
              const FeasibilityOptions& opts) {
  const int m = static_cast<int>(k.size());
  const Eigen::VectorXd c0 = t * (target / t.squaredNorm());
  auto project = [&](Eigen::VectorXd v) { return Eigen::VectorXd(v - t * (t.dot(v) / t.squaredNorm())); };
  auto combine = [&](const Eigen::VectorXd& c) {
    Dense sum = Dense::Zero(k[0].rows(), k[0].cols());
    for (int i = 0; i < m; ++i) sum += c(i) * k[i];
    return sum;
  };
  std::mt19937 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Ascent out;
  for (int r = 0; r < opts.restarts; ++r) {
    Eigen::VectorXd c = c0;
    if (r > 0) {
      Eigen::VectorXd z(m);
      for (int i = 0; i < m; ++i) z(i) = normal(rng);
      c += project(z) * (double(r) / opts.restarts * 4.0);
    }
    const double step0 = std::max(1.0, c.norm()) * 0.5;
    for (int it = 0; it < opts.iterations; ++it) {
      Eigen::VectorXd u;
      const double lm = lambda_min(combine(c), &u);
      if (lm > out.best) {
        out.best = lm;
        out.c = c;
      }
      Eigen::VectorXd grad(m);
      for (int i = 0; i < m; ++i) grad(i) = u.dot(k[i] * u);
      grad = project(grad);
      const double gn = grad.norm();
      if (gn < 1e-14) break;
      c += grad * (step0 / (gn * std::sqrt(it + 1.0)));
    }
  }
  return out;
}

// Alternating projections between {Y : <Y, K_k> = 0, tr Y = 1} and the PSD cone.
std::optional<Dense> numeric_dual(const std::vector<Dense>& k, int n, double tol) {
  const int m = static_cast<int>(k.size());
  const int sz = n * (n + 1) / 2;
  // Coordinates of symmetric matrices in the Frobenius inner product.
  auto vec = [&](const Dense& y) {
    Eigen::VectorXd v(sz);
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) v(p++) = i == j ? y(i, i) : std::sqrt(2.0) * y(i, j);
    return v;
  };
  auto unvec = [&](const Eigen::VectorXd& v) {
    Dense y(n, n);
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        y(i, j) = y(j, i) = i == j ? v(p) : v(p) / std::sqrt(2.0);
        ++p;
      }
    return y;
  };
  Dense a(m + 1, sz);
  for (int i = 0; i < m; ++i) a.row(i) = vec(k[i]).transpose();
  a.row(m) = vec(Dense::Identity(n, n)).transpose();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
  b(m) = 1.0;
  const auto pinv = a.completeOrthogonalDecomposition();
  auto affine = [&](const Eigen::VectorXd& v) { return Eigen::VectorXd(v - pinv.solve(a * v - b)); };
  auto cone = [&](const Dense& y) {
    Eigen::SelfAdjointEigenSolver<Dense> es(y);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    return Dense(es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose());
  };
  Eigen::VectorXd v = affine(vec(Dense::Identity(n, n) / n));
  for (int it = 0; it < 5000; ++it) {
    const Dense y = cone(unvec(v));
    const Eigen::VectorXd next = affine(vec(y));
    if ((next - vec(y)).norm() < tol * 1e-2) return cone(unvec(next));
    v = next;
  }
  const Dense y = cone(unvec(v));
  if ((a * vec(y) - b).cwiseAbs().maxCoeff() < tol) return y;
  return std::nullopt;
}

}  // namespace

template <class T>
FeasibilityResult<T> symplectic_feasibility(const AlmostHermitianStructure<T>& s, const FeasibilityOptions& opts) {
  const int dim = s.dim();
  const int n = s.n();
  const double tol = opts.tol;
  const auto& alg = s.algebra();
  FeasibilityResult<T> out;
  out.scope = n == 2 ? "left-invariant J-invariant 2-forms with d(omega^(n-1)) = 0"
                     : "left-invariant closed J-invariant 2-forms (a linear slice of d(omega^(n-1)) = 0)";

  // Candidate space: J-invariant and closed.
  const int n2 = KForm<T>(dim, 2).size();
  const int n3 = KForm<T>(dim, 3).size();
  const int rows = dim * dim + n3;
  Matrix<T> cons(rows, n2);
  for (int p = 0; p < n2; ++p) {
    KForm<T> b(dim, 2);
    b[p] = T(1);
    const Matrix<T> w = b.to_matrix();
    const Matrix<T> anti = s.J().transpose() * w * s.J() - w;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) cons(i * dim + j, p) = anti(i, j);
    const KForm<T> db = d(alg, b);
    for (int q = 0; q < n3; ++q) cons(dim * dim + q, p) = db[q];
  }
  const auto space = nullspace(cons, tol);
  out.subspace_dim = static_cast<int>(space.size());
  std::vector<KForm<T>> forms;
  std::vector<Matrix<T>> pairings;
  for (const auto& v : space) {
    KForm<T> f(dim, 2);
    for (int p = 0; p < n2; ++p) f[p] = v[p];
    pairings.push_back(pairing(s, f.to_matrix()));
    forms.push_back(std::move(f));
  }

  // Eigenvalues relative to g: L^{-1} S L^{-T} with g = L L^T.
  const Eigen::LLT<Dense> chol(to_eigen(s.g()));
  const Dense lower = chol.matrixL();
  auto relative = [&](const Dense& m) {
    const Dense x = lower.triangularView<Eigen::Lower>().solve(m);
    return Dense(lower.triangularView<Eigen::Lower>().solve(x.transpose()).transpose());
  };

  // F itself is the first candidate.
  if (d(alg, s.F()).is_zero(tol)) {
    out.status = FeasibilityStatus::Feasible;
    out.witness = s.F();
    out.optimum = lambda_min(relative(to_eigen(pairing(s, s.F_matrix()))));
    return out;
  }
  if (space.empty()) {
    out.status = FeasibilityStatus::Infeasible;
    out.certificate = "trace_dual";
    out.optimum = 0;
    return out;
  }

  std::vector<Dense> k;
  Eigen::VectorXd t(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    k.push_back(relative(to_eigen(pairings[i])));
    t(i) = k.back().trace();
  }

  bool all_traceless = true;
  for (const auto& p : pairings)
    if (!is_zero(metric_trace(s.g_inverse(), p), tol)) all_traceless = false;

  if (!all_traceless) {
    const Ascent best = ascend(k, t, 2.0 * n, opts);
    out.optimum = best.best;
    if (best.best > tol) {
      KForm<T> w(dim, 2);
      for (std::size_t i = 0; i < space.size(); ++i) w += forms[i] * ScalarTraits<T>::from_double(best.c(i));
      if (is_positive_definite(pairing(s, w.to_matrix()), tol) && d(alg, w).is_zero(tol)) {
        out.status = FeasibilityStatus::Feasible;
        out.witness = w;
        return out;
      }
    }
  } else {
    out.optimum = 0;
    out.status = FeasibilityStatus::Infeasible;
    out.certificate = "trace_dual";
    out.dual_value = lambda_min(to_eigen(s.g_inverse()));
    return out;
  }

  // Dual certificate Z >= 0, Z != 0, <Z, S(omega)> = 0 on the candidate space.
  auto certifies = [&](const Matrix<T>& z) {
    if (max_abs(z) == T(0) || is_zero(max_abs(z), tol)) return false;
    for (const auto& p : pairings)
      if (!is_zero(frobenius(z, p), tol)) return false;
    return is_positive_semidefinite(z, tol);
  };
  // Z = T T^t + JT JT^t pairs with S(omega) to omega(T, JT) up to sign.
  const LeeData<T> lee = lee_form(s);
  Matrix<T> z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = lee.T_field[i] * lee.T_field[j] + lee.JT[i] * lee.JT[j];
  if (certifies(z)) {
    out.status = FeasibilityStatus::Infeasible;
    out.certificate = "lee_form_dual";
    const Dense ze = to_eigen(z);
    out.dual_value = lambda_min(ze / ze.trace());
    return out;
  }
  if (auto y = numeric_dual(k, dim, tol)) {
    out.status = FeasibilityStatus::Infeasible;
    out.certificate = "numeric_dual";
    out.dual_value = lambda_min(*y);
    return out;
  }
  out.status = out.optimum <= -tol ? FeasibilityStatus::Infeasible : FeasibilityStatus::Inconclusive;
  return out;
}

template FeasibilityResult<Rational> symplectic_feasibility(const AlmostHermitianStructure<Rational>&,
                                                            const FeasibilityOptions&);
template FeasibilityResult<double> symplectic_feasibility(const AlmostHermitianStructure<double>&,
                                                          const FeasibilityOptions&);

}  // namespace lcak
