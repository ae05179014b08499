#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>

namespace oracle {

using lcak::operator+;
using lcak::operator-;
using lcak::operator*;

namespace {

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<std::vector<int>> increasing_tuples(int dim, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < dim; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

KForm<Rational> from_values(int dim, int k, const std::vector<std::vector<int>>& tuples,
                            const std::vector<Rational>& values) {
  KForm<Rational> out(dim, k);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    if (values[t] != 0) out += values[t] * KForm<Rational>::basis(dim, tuples[t]);
  return out;
}

}  // namespace

Rational eval_basis(const KForm<Rational>& alpha, const std::vector<int>& idx) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Rational(0);
  if (alpha.degree() == 0) return alpha[0];
  return permutation_sign(idx) * alpha.coefficient(sorted);
}

Rational eval(const KForm<Rational>& alpha, const std::vector<Vector<Rational>>& vs) {
  const int k = alpha.degree();
  const int dim = alpha.dim();
  if (k == 0) return alpha[0];
  Rational total(0);
  std::vector<int> idx(k, 0);
  for (;;) {
    Rational w(1);
    for (int a = 0; a < k && w != 0; ++a) w *= vs[a][idx[a]];
    if (w != 0) total += w * eval_basis(alpha, idx);
    int a = k - 1;
    while (a >= 0 && ++idx[a] == dim) idx[a--] = 0;
    if (a < 0) break;
  }
  return total;
}

KForm<Rational> wedge(const KForm<Rational>& a, const KForm<Rational>& b) {
  const int dim = a.dim();
  const int k = a.degree(), l = b.degree();
  if (k + l > dim) return KForm<Rational>(dim, std::min(k + l, dim));
  const auto tuples = increasing_tuples(dim, k + l);
  std::vector<Rational> values;
  for (const auto& t : tuples) {
    std::vector<int> perm(k + l);
    std::iota(perm.begin(), perm.end(), 0);
    Rational sum(0);
    do {
      std::vector<int> ia, ib;
      for (int i = 0; i < k; ++i) ia.push_back(t[perm[i]]);
      for (int i = k; i < k + l; ++i) ib.push_back(t[perm[i]]);
      sum += permutation_sign(perm) * eval_basis(a, ia) * eval_basis(b, ib);
    } while (std::next_permutation(perm.begin(), perm.end()));
    values.push_back(sum / (factorial(k) * factorial(l)));
  }
  return from_values(dim, k + l, tuples, values);
}

KForm<Rational> d(const LieAlgebra<Rational>& alg, const KForm<Rational>& alpha) {
  const int dim = alg.dim();
  const int k = alpha.degree();
  if (k + 1 > dim) return KForm<Rational>(dim, dim);
  const auto tuples = increasing_tuples(dim, k + 1);
  std::vector<Rational> values;
  for (const auto& t : tuples) {
    Rational sum(0);
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<Vector<Rational>> args{alg.bracket_basis(t[i], t[j])};
        for (int m = 0; m <= k; ++m)
          if (m != i && m != j) args.push_back(lcak::unit_vector<Rational>(dim, t[m]));
        sum += ((i + j) % 2 ? -1 : 1) * eval(alpha, args);
      }
    values.push_back(sum);
  }
  return from_values(dim, k + 1, tuples, values);
}

Rational jacobi_residual(const LieAlgebra<Rational>& alg) {
  const int dim = alg.dim();
  Rational worst(0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const auto ei = lcak::unit_vector<Rational>(dim, i);
        const auto ej = lcak::unit_vector<Rational>(dim, j);
        const auto ek = lcak::unit_vector<Rational>(dim, k);
        const auto s = alg.bracket(alg.bracket(ei, ej), ek) + alg.bracket(alg.bracket(ej, ek), ei) +
                       alg.bracket(alg.bracket(ek, ei), ej);
        for (const auto& x : s) worst = std::max(worst, Rational(x < 0 ? -x : x));
      }
  return worst;
}

Vector<Rational> nijenhuis(const LieAlgebra<Rational>& alg, const Matrix<Rational>& j, const Vector<Rational>& x,
                           const Vector<Rational>& y) {
  const auto jx = j * x, jy = j * y;
  auto n = alg.bracket(jx, jy) - alg.bracket(x, y) - j * alg.bracket(jx, y) - j * alg.bracket(x, jy);
  return Rational(1, 4) * n;
}

std::vector<Rational> lee_form(const LieAlgebra<Rational>& alg, const KForm<Rational>& f) {
  const int dim = alg.dim();
  const KForm<Rational> df = d(alg, f);
  const auto tuples = increasing_tuples(dim, 3);
  Matrix<Rational> a(static_cast<int>(tuples.size()), dim);
  Vector<Rational> rhs;
  for (int c = 0; c < dim; ++c) {
    const auto w = wedge(KForm<Rational>::basis(dim, {c}), f);
    for (std::size_t t = 0; t < tuples.size(); ++t) a(static_cast<int>(t), c) = eval_basis(w, tuples[t]);
  }
  for (const auto& t : tuples) rhs.push_back(eval_basis(df, t));
  // Gaussian elimination on the augmented system.
  const int rows = a.rows();
  Matrix<Rational> m(rows, dim + 1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = a(r, c);
    m(r, dim) = rhs[r];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < dim && row < rows; ++c) {
    int p = row;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    for (int cc = 0; cc <= dim; ++cc) std::swap(m(row, cc), m(p, cc));
    const Rational inv = 1 / m(row, c);
    for (int cc = 0; cc <= dim; ++cc) m(row, cc) *= inv;
    for (int r = 0; r < rows; ++r)
      if (r != row && m(r, c) != 0) {
        const Rational fct = m(r, c);
        for (int cc = 0; cc <= dim; ++cc) m(r, cc) -= fct * m(row, cc);
      }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (m(r, dim) != 0) return {};
  std::vector<Rational> theta(dim, Rational(0));
  for (int r = 0; r < row; ++r) theta[pivot_col[r]] = m(r, dim);
  return theta;
}

std::string eigen_type(const Matrix<Rational>& ad3) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = ad3(i, j).convert_to<double>();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double eps = 1e-9 * scale;
  const Eigen::Vector3cd ev = m.eigenvalues();
  int zero = 0, real_nonzero = 0, complex_ = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(ev[i]) < 1e-6 * scale)
      ++zero;
    else if (std::abs(ev[i].imag()) < eps)
      ++real_nonzero;
    else
      ++complex_;
  }
  if (zero == 3) {
    if (m.norm() < eps) return "abelian";
    return (m * m).norm() < eps ? "h3+R" : "A4_1";
  }
  const double tr = m.trace();
  if (zero == 1 && real_nonzero == 2 && std::abs(tr) < 1e-6 * scale) return "A3_4+A1";
  if (zero == 1 && complex_ == 2 && std::abs(tr) < 1e-6 * scale) return "A3_6+A1";
  return "other";
}

}  // namespace oracle
