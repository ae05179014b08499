#include "lcak/connection.hpp"

#include <cmath>

namespace lcak {

template <class T>
Matrix<T> ConnectionTable<T>::along(const Vector<T>& x) const {
  const int n = dim();
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i)
    if (x[i] != 0) m += gamma[i] * x[i];
  return m;
}

template <class T>
ConnectionTable<T> levi_civita(const AlmostHermitianStructure<T>& s) {
  const int n = s.dim();
  const auto& alg = s.algebra();
  const Matrix<T>& g = s.g();
  // gc[i][j] = g([e_i, e_j], .) as a covector
  std::vector<std::vector<Vector<T>>> gc(n, std::vector<Vector<T>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gc[i][j] = g * alg.bracket_basis(i, j);
  ConnectionTable<T> out;
  out.gamma.assign(n, Matrix<T>(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // k-th entry: 2 g(D_i e_j, e_k)
      Vector<T> rhs(n);
      for (int k = 0; k < n; ++k) rhs[k] = (gc[i][j][k] - gc[j][k][i] + gc[k][i][j]) * frac<T>(1, 2);
      out.gamma[i].set_column(j, s.g_inverse() * rhs);
    }
  return out;
}

template <class T>
T koszul_residual(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c) {
  const int n = s.dim();
  const auto& alg = s.algebra();
  T worst(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vector<T> ei = unit_vector<T>(n, i), ej = unit_vector<T>(n, j), ek = unit_vector<T>(n, k);
        const T lhs = T(2) * s.inner(c.gamma[i].column(j), ek);
        const T rhs = s.inner(alg.bracket(ei, ej), ek) - s.inner(alg.bracket(ej, ek), ei) +
                      s.inner(alg.bracket(ek, ei), ej);
        const T a = abs_value(T(lhs - rhs));
        if (a > worst) worst = a;
      }
  return worst;
}

template <class T>
T torsion_residual(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c) {
  const int n = s.dim();
  T worst(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector<T> t = c.gamma[i].column(j) - c.gamma[j].column(i) - s.algebra().bracket_basis(i, j);
      const T a = max_abs(t);
      if (a > worst) worst = a;
    }
  return worst;
}

template <class T>
T metric_residual(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c) {
  T worst(0);
  for (const auto& gm : c.gamma) {
    const T a = max_abs(s.g() * gm + gm.transpose() * s.g());
    if (a > worst) worst = a;
  }
  return worst;
}

template <class T>
Matrix<T> covariant_derivative_one_form(const ConnectionTable<T>& c, const Vector<T>& alpha) {
  const int n = c.dim();
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i) {
    // (D_i alpha)(e_j) = -alpha(D_i e_j)
    const Vector<T> row = c.gamma[i].transpose() * alpha;
    for (int j = 0; j < n; ++j) out(i, j) = -row[j];
  }
  return out;
}

template <class T>
std::vector<Matrix<T>> covariant_derivative_tensor(const ConnectionTable<T>& c, const Matrix<T>& phi) {
  std::vector<Matrix<T>> out;
  out.reserve(c.dim());
  for (const auto& gm : c.gamma) out.push_back(-(gm.transpose() * phi) - phi * gm);
  return out;
}

template <class T>
std::vector<Matrix<T>> covariant_derivative_endomorphism(const ConnectionTable<T>& c,
                                                         const Matrix<T>& e) {
  std::vector<Matrix<T>> out;
  out.reserve(c.dim());
  for (const auto& gm : c.gamma) out.push_back(gm * e - e * gm);
  return out;
}

template <class T>
std::vector<KForm<T>> covariant_derivative_form(const ConnectionTable<T>& c, const KForm<T>& alpha) {
  std::vector<KForm<T>> out;
  out.reserve(c.dim());
  for (const auto& gm : c.gamma) out.push_back(-derivation_action(gm, alpha));
  return out;
}

template <class T>
T codifferential_one_form(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c,
                          const Vector<T>& alpha) {
  return -metric_trace(s.g_inverse(), covariant_derivative_one_form(c, alpha));
}

template <class T>
Vector<T> codifferential_tensor(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c,
                                const Matrix<T>& phi) {
  const int n = s.dim();
  const auto dphi = covariant_derivative_tensor(c, phi);
  const Matrix<T>& gi = s.g_inverse();
  Vector<T> out(n, T(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (gi(a, b) == 0) continue;
      for (int y = 0; y < n; ++y) out[y] -= gi(a, b) * dphi[a](b, y);
    }
  return out;
}

template <class T>
KForm<T> codifferential_form(const AlmostHermitianStructure<T>& s, const ConnectionTable<T>& c,
                             const KForm<T>& alpha) {
  const int n = s.dim();
  const auto dalpha = covariant_derivative_form(c, alpha);
  const Matrix<T>& gi = s.g_inverse();
  KForm<T> out(n, alpha.degree() > 0 ? alpha.degree() - 1 : 0);
  if (alpha.degree() == 0) return out;
  for (int a = 0; a < n; ++a) out -= contract(gi.column(a), dalpha[a]);
  return out;
}

template <class T>
T Curvature<T>::component(const Matrix<T>& g, int x, int y, int z, int w) const {
  return bilinear(r[x][y].column(z), g, unit_vector<T>(dim(), w));
}

template <class T>
Curvature<T> curvature(const LieAlgebra<T>& alg, const ConnectionTable<T>& c) {
  const int n = alg.dim();
  Curvature<T> out;
  out.r.assign(n, std::vector<Matrix<T>>(n, Matrix<T>(n, n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Matrix<T>& gi = c.gamma[i];
      const Matrix<T>& gj = c.gamma[j];
      out.r[i][j] = c.along(alg.bracket_basis(i, j)) - (gi * gj - gj * gi);
      out.r[j][i] = -out.r[i][j];
    }
  return out;
}

template <class T>
CurvatureSymmetries<T> curvature_symmetries(const AlmostHermitianStructure<T>& s,
                                            const Curvature<T>& r) {
  const int n = s.dim();
  const Matrix<T>& g = s.g();
  // Dense R(x, y, z, w).
  std::vector<T> rr(std::size_t(n) * n * n * n);
  auto at = [&](int x, int y, int z, int w) -> T& {
    return rr[((std::size_t(x) * n + y) * n + z) * n + w];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Matrix<T> grm = r.r[x][y].transpose() * g;  // (z, w) -> g(R e_z, e_w)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) at(x, y, z, w) = grm(z, w);
    }
  CurvatureSymmetries<T> out;
  auto upd = [](T& worst, const T& v) {
    const T a = abs_value(v);
    if (a > worst) worst = a;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          upd(out.antisymmetry_xy, at(x, y, z, w) + at(y, x, z, w));
          upd(out.antisymmetry_zw, at(x, y, z, w) + at(x, y, w, z));
          upd(out.pair_symmetry, at(x, y, z, w) - at(z, w, x, y));
          upd(out.bianchi, at(x, y, z, w) + at(y, z, x, w) + at(z, x, y, w));
        }
  return out;
}

template <class T>
T metric_trace(const Matrix<T>& ginv, const Matrix<T>& b) {
  T s(0);
  for (int i = 0; i < ginv.rows(); ++i)
    for (int j = 0; j < ginv.cols(); ++j)
      if (ginv(i, j) != 0) s += ginv(i, j) * b(i, j);
  return s;
}

namespace {

template <class T>
Matrix<T> hermitian_ricci(const AlmostHermitianStructure<T>& s,
                          const std::vector<std::vector<Matrix<T>>>& r) {
  const int n = s.dim();
  const Matrix<T> gj = s.g() * s.J();
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out(i, j) = metric_trace(s.g_inverse(), r[i][j].transpose() * gj) * frac<T>(1, 2);
      out(j, i) = -out(i, j);
    }
  return out;
}

}  // namespace

template <class T>
Matrix<T> star_ricci(const AlmostHermitianStructure<T>& s, const Curvature<T>& r) {
  return hermitian_ricci(s, r.r);
}

std::vector<Vector<double>> unitary_frame(const AlmostHermitianStructure<double>& s,
                                          const std::vector<Vector<double>>& seeds) {
  const int n = s.dim();
  std::vector<Vector<double>> candidates = seeds;
  for (int i = 0; i < n; ++i) candidates.push_back(unit_vector<double>(n, i));
  std::vector<Vector<double>> frame;
  for (auto v : candidates) {
    if (static_cast<int>(frame.size()) == n) break;
    for (const auto& u : frame) v = v - s.inner(v, u) * u;
    const double norm = std::sqrt(s.inner(v, v));
    if (norm < 1e-6) continue;
    v = (1.0 / norm) * v;
    Vector<double> jv = s.J() * v;
    frame.push_back(v);
    frame.push_back(jv);  // already orthonormal to the span, which is J-invariant
  }
  return frame;
}

Matrix<double> star_ricci_in_frame(const AlmostHermitianStructure<double>& s,
                                   const Curvature<double>& r,
                                   const std::vector<Vector<double>>& seeds) {
  const int n = s.dim();
  const auto frame = unitary_frame(s, seeds);
  Matrix<double> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double sum = 0;
      for (const auto& u : frame) sum += s.inner(r.r[i][j] * u, s.J() * u);
      out(i, j) = 0.5 * sum;
    }
  return out;
}

template <class T>
Matrix<T> RicciForms<T>::gamma(const T& t) const {
  return gamma0 - dj_theta * (t * T(n - 1) / T(2));
}

template <class T>
std::vector<Matrix<T>> first_canonical_connection(const AlmostHermitianStructure<T>& s,
                                                  const ConnectionTable<T>& c) {
  const auto dj = covariant_derivative_endomorphism(c, s.J());
  std::vector<Matrix<T>> out;
  out.reserve(c.dim());
  for (int i = 0; i < c.dim(); ++i) out.push_back(c.gamma[i] - s.J() * dj[i] * frac<T>(1, 2));
  return out;
}

template <class T>
RicciForms<T> canonical_connection_forms(const AlmostHermitianStructure<T>& s,
                                         const ConnectionTable<T>& c, const Curvature<T>& r,
                                         const Vector<T>& theta) {
  const int n = s.dim();
  const auto& alg = s.algebra();
  RicciForms<T> out;
  out.n = s.n();
  out.rho_star = star_ricci(s, r);

  const auto a = first_canonical_connection(s, c);
  auto a_along = [&](const Vector<T>& x) {
    Matrix<T> m(n, n);
    for (int i = 0; i < n; ++i)
      if (x[i] != 0) m += a[i] * x[i];
    return m;
  };
  std::vector<std::vector<Matrix<T>>> r0(n, std::vector<Matrix<T>>(n, Matrix<T>(n, n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      r0[i][j] = a_along(alg.bracket_basis(i, j)) - (a[i] * a[j] - a[j] * a[i]);
      r0[j][i] = -r0[i][j];
    }
  out.gamma0 = hermitian_ricci(s, r0);

  // Phi(X, Y) = 1/4 <J D_X J, D_Y J> with <A, B> = tr(A^* B) for the g-adjoint.
  const auto dj = covariant_derivative_endomorphism(c, s.J());
  out.phi = Matrix<T>(n, n);
  for (int i = 0; i < n; ++i) {
    const Matrix<T> left = (s.J() * dj[i]).transpose() * s.g();
    for (int j = 0; j < n; ++j)
      out.phi(i, j) = (s.g_inverse() * left * dj[j]).trace() * frac<T>(1, 4);
  }

  out.dj_theta = d(alg, KForm<T>::one_form(j_on_one_form(s, theta))).to_matrix();
  return out;
}

template <class T>
Matrix<T> HermitianGeometry<T>::dj_along(const Vector<T>& x) const {
  Matrix<T> m(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (x[i] != 0) m += dj[i] * x[i];
  return m;
}

template <class T>
HermitianGeometry<T> analyze(const AlmostHermitianStructure<T>& s) {
  HermitianGeometry<T> geo{s, lee_form(s), levi_civita(s), {}, {}, {}};
  geo.dj = covariant_derivative_endomorphism(geo.connection, s.J());
  geo.curv = curvature(s.algebra(), geo.connection);
  geo.rho_star = star_ricci(s, geo.curv);
  return geo;
}

#define LCAK_INSTANTIATE_CONNECTION(T)                                                               \
  template struct ConnectionTable<T>;                                                                \
  template struct Curvature<T>;                                                                      \
  template struct RicciForms<T>;                                                                     \
  template struct HermitianGeometry<T>;                                                              \
  template ConnectionTable<T> levi_civita(const AlmostHermitianStructure<T>&);                       \
  template T koszul_residual(const AlmostHermitianStructure<T>&, const ConnectionTable<T>&);         \
  template T torsion_residual(const AlmostHermitianStructure<T>&, const ConnectionTable<T>&);        \
  template T metric_residual(const AlmostHermitianStructure<T>&, const ConnectionTable<T>&);         \
  template Matrix<T> covariant_derivative_one_form(const ConnectionTable<T>&, const Vector<T>&);     \
  template std::vector<Matrix<T>> covariant_derivative_tensor(const ConnectionTable<T>&,             \
                                                              const Matrix<T>&);                     \
  template std::vector<Matrix<T>> covariant_derivative_endomorphism(const ConnectionTable<T>&,       \
                                                                    const Matrix<T>&);               \
  template std::vector<KForm<T>> covariant_derivative_form(const ConnectionTable<T>&,                \
                                                           const KForm<T>&);                         \
  template T codifferential_one_form(const AlmostHermitianStructure<T>&, const ConnectionTable<T>&,  \
                                     const Vector<T>&);                                              \
  template Vector<T> codifferential_tensor(const AlmostHermitianStructure<T>&,                       \
                                           const ConnectionTable<T>&, const Matrix<T>&);             \
  template KForm<T> codifferential_form(const AlmostHermitianStructure<T>&,                          \
                                        const ConnectionTable<T>&, const KForm<T>&);                 \
  template Curvature<T> curvature(const LieAlgebra<T>&, const ConnectionTable<T>&);                  \
  template CurvatureSymmetries<T> curvature_symmetries(const AlmostHermitianStructure<T>&,           \
                                                       const Curvature<T>&);                         \
  template T metric_trace(const Matrix<T>&, const Matrix<T>&);                                       \
  template Matrix<T> star_ricci(const AlmostHermitianStructure<T>&, const Curvature<T>&);            \
  template std::vector<Matrix<T>> first_canonical_connection(const AlmostHermitianStructure<T>&,     \
                                                             const ConnectionTable<T>&);             \
  template RicciForms<T> canonical_connection_forms(const AlmostHermitianStructure<T>&,              \
                                                    const ConnectionTable<T>&, const Curvature<T>&,  \
                                                    const Vector<T>&);                               \
  template HermitianGeometry<T> analyze(const AlmostHermitianStructure<T>&);

LCAK_INSTANTIATE_CONNECTION(Rational)
LCAK_INSTANTIATE_CONNECTION(double)

}  // namespace lcak
