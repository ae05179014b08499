#include "lcak/almost_abelian.hpp"

#include <sstream>

namespace lcak {

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::A_4_1: return "A_4_1";
    case ClassKind::A_3_4_plus_A1: return "A_3_4_plus_A1";
    case ClassKind::A_3_6_plus_A1: return "A_3_6_plus_A1";
    case ClassKind::Abelian: return "abelian";
    case ClassKind::Other: return "other";
  }
  return "other";
}

std::string ClassLabel::str() const {
  if (kind != ClassKind::Other) return to_string(kind);
  std::ostringstream os;
  os << "other(dim=" << dim << ", nilpotency=" << nilpotency_index << ", eigen=" << eigen_signature
     << ", unimodular=" << (unimodular ? "true" : "false") << ")";
  return os.str();
}

template <class T>
AlmostAbelianParams<T> AlmostAbelianParams<T>::zero(int n) {
  const int m = 2 * n - 2;
  return {n, T(0), Vector<T>(m, T(0)), Vector<T>(m, T(0)), Matrix<T>(m, m)};
}

namespace {

template <class T>
void check_sizes(const AlmostAbelianParams<T>& p) {
  if (p.n < 2) fail(ErrorCode::UnsupportedDimension, "almost abelian structures need n >= 2");
  const std::size_t m = 2 * p.n - 2;
  if (p.b.size() != m || p.v.size() != m || p.A.rows() != int(m) || p.A.cols() != int(m))
    fail(ErrorCode::DimensionMismatch, "b, v and A must have size 2n - 2 = " + std::to_string(m));
}

template <class T>
int sign_of(const T& x, double tol) {
  if (is_zero(x, tol)) return 0;
  return x > T(0) ? 1 : -1;
}

}  // namespace

template <class T>
Matrix<T> ad_block(const AlmostAbelianParams<T>& p) {
  check_sizes(p);
  const int m = 2 * p.n - 2;
  Matrix<T> out(m + 1, m + 1);
  out(0, 0) = p.a;
  for (int i = 0; i < m; ++i) {
    out(0, i + 1) = p.b[i];
    out(i + 1, 0) = p.v[i];
    for (int j = 0; j < m; ++j) out(i + 1, j + 1) = p.A(i, j);
  }
  return out;
}

template <class T>
LieAlgebra<T> almost_abelian_algebra(const AlmostAbelianParams<T>& p) {
  const Matrix<T> m = ad_block(p);
  const int last = 2 * p.n - 1;
  std::vector<StructureConstant<T>> cs;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != T(0)) cs.push_back({last, j, i, m(i, j)});
  return LieAlgebra<T>::from_constants(2 * p.n, cs);
}

template <class T>
Matrix<T> almost_abelian_J(int n) {
  Matrix<T> j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(2 * n - 1 - i, i) = T(1);
    j(i, 2 * n - 1 - i) = T(-1);
  }
  return j;
}

template <class T>
AlmostHermitianStructure<T> build_almost_abelian(const AlmostAbelianParams<T>& p, double tol) {
  return AlmostHermitianStructure<T>(almost_abelian_algebra(p), almost_abelian_J<T>(p.n),
                                     Matrix<T>::identity(2 * p.n), tol);
}

template <class T>
Vector<T> lee_form_aa(const AlmostAbelianParams<T>& p) {
  check_sizes(p);
  const int dim = 2 * p.n;
  Vector<T> v(dim, T(0));
  for (std::size_t i = 0; i < p.v.size(); ++i) v[i + 1] = p.v[i];
  Vector<T> theta = almost_abelian_J<T>(p.n) * v;
  theta[dim - 1] -= p.A.trace();
  return (T(1) / T(p.n - 1)) * theta;
}

template <class T>
bool is_unimodular_aa(const AlmostAbelianParams<T>& p, double tol) {
  check_sizes(p);
  return is_zero(T(p.a + p.A.trace()), tol);
}

template <class T>
bool AaConditionResiduals<T>::all_vanish(double tol) const {
  return is_zero_vector(dtheta, tol) && is_zero_vector(orthogonality, tol) &&
         is_zero_vector(j_anti_invariance, tol);
}

template <class T>
AaConditionResiduals<T> pluricanonical_conditions_aa(const AlmostAbelianParams<T>& p) {
  check_sizes(p);
  if (p.n != 2) fail(ErrorCode::UnsupportedDimension, "the condition systems are derived for dimension 4");
  const T& a11 = p.A(0, 0);
  const T& a12 = p.A(0, 1);
  const T& a21 = p.A(1, 0);
  const T& a22 = p.A(1, 1);
  const T& v1 = p.v[0];
  const T& v2 = p.v[1];
  AaConditionResiduals<T> r;
  r.dtheta = {a21 * v1 - a11 * v2, a22 * v1 - a12 * v2};
  r.orthogonality = {a11 * v1 + a21 * v2 + p.a * p.b[0], a12 * v1 + a22 * v2 + p.a * p.b[1]};
  r.j_anti_invariance = {p.a, a22 * v1 - a21 * v2, a12 * v1 - a11 * v2};
  return r;
}

template <class T>
ClassLabel jordan_type(const Matrix<T>& m, double tol) {
  if (m.rows() != 3 || m.cols() != 3) fail(ErrorCode::DimensionMismatch, "jordan_type expects a 3x3 matrix");
  const Matrix<T> id = Matrix<T>::identity(3);
  // Faddeev-LeVerrier: p(x) = x^3 + c2 x^2 + c1 x + c0.
  const T c2 = -m.trace();
  const Matrix<T> m2 = m * (m + id * c2);
  const T c1 = -m2.trace() / T(2);
  const Matrix<T> m3 = m * (m2 + id * c1);
  const T c0 = -m3.trace() / T(3);

  ClassLabel out;
  out.unimodular = is_zero(c2, tol);
  const double scale = std::max(1.0, to_double(max_abs(m)));
  const double ptol = tol * scale * scale * scale;
  const int s2 = sign_of(c2, tol * scale);
  const int s1 = sign_of(c1, tol * scale * scale);
  const int s0 = sign_of(c0, ptol);

  if (s2 == 0 && s1 == 0 && s0 == 0) {
    Matrix<T> power = m;
    int k = 1;
    while (rank(power, tol * scale) > 0 && k < 4) {
      power = power * m;
      ++k;
    }
    out.nilpotency_index = k;
  }

  // Eigenvalue signature.
  int zeros = 0, pos = 0, neg = 0, pairs = 0;
  if (s0 == 0) {
    ++zeros;
    if (s1 == 0) {
      ++zeros;
      if (s2 == 0) {
        ++zeros;
      } else {
        (s2 < 0 ? pos : neg) += 1;  // root -c2
      }
    } else {
      // x^2 + c2 x + c1.
      const T disc = c2 * c2 - T(4) * c1;
      const int sd = sign_of(disc, tol * scale * scale);
      if (sd < 0) {
        pairs = 1;
      } else if (s1 < 0) {
        pos = neg = 1;
      } else {
        (s2 < 0 ? pos : neg) += 2;
      }
    }
  } else {
    const T disc = T(18) * c2 * c1 * c0 - T(4) * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 - T(4) * c1 * c1 * c1 -
                   T(27) * c0 * c0;
    const int sd = sign_of(disc, ptol * ptol);
    if (sd < 0) {
      pairs = 1;
      (s0 < 0 ? pos : neg) += 1;  // product of roots is -c0
    } else {
      int changes = 0, last = 1;
      for (int s : {s2, s1, s0}) {
        if (s == 0) continue;
        if (s != last) ++changes;
        last = s;
      }
      pos = changes;
      neg = 3 - pos;
    }
  }
  std::ostringstream sig;
  sig << "z" << zeros << "p" << pos << "m" << neg << "c" << pairs;
  out.eigen_signature = sig.str();

  if (is_zero(max_abs(m), tol)) {
    out.kind = ClassKind::Abelian;
  } else if (out.nilpotency_index == 3) {
    out.kind = ClassKind::A_4_1;
  } else if (s2 == 0 && s0 == 0 && s1 < 0) {
    out.kind = ClassKind::A_3_4_plus_A1;
  } else if (s2 == 0 && s0 == 0 && s1 > 0) {
    out.kind = ClassKind::A_3_6_plus_A1;
  }
  return out;
}

template <class T>
Classification<T> classify_4d(const AlmostAbelianParams<T>& p, double tol) {
  check_sizes(p);
  if (p.n != 2) fail(ErrorCode::UnsupportedDimension, "classification is implemented for dimension 4");
  if (!pluricanonical_conditions_aa(p).all_vanish(tol))
    fail(ErrorCode::PreconditionFailed, "the pluricanonical condition systems do not vanish");
  if (!is_unimodular_aa(p, tol)) fail(ErrorCode::PreconditionFailed, "the algebra is not unimodular");
  if (!is_zero(max_abs(p.A), tol) || !is_zero(p.a, tol))
    fail(ErrorCode::PreconditionFailed, "a and A must vanish");
  const bool v_zero = is_zero_vector(p.v, tol);
  const bool b_zero = is_zero_vector(p.b, tol);
  if (v_zero && b_zero) fail(ErrorCode::Degenerate, "b = v = 0 gives the abelian algebra");
  if (v_zero) fail(ErrorCode::PreconditionFailed, "v = 0 gives theta = 0");

  Classification<T> out;
  out.b_dot_v = dot(p.b, p.v);
  const int s = sign_of(out.b_dot_v, tol * std::max(1.0, to_double(T(max_abs(p.b) * max_abs(p.v)))));
  if (s > 0) {
    out.label = {ClassKind::A_3_4_plus_A1, 4, 0, "z1p1m1c0", true};
  } else if (s < 0) {
    out.label = {ClassKind::A_3_6_plus_A1, 4, 0, "z1p0m0c1", true};
  } else if (!b_zero) {
    out.label = {ClassKind::A_4_1, 4, 3, "z3p0m0c0", true};
  } else {
    // ad_{e4} has square zero: the Heisenberg algebra plus a line.
    out.label = {ClassKind::Other, 4, 2, "z3p0m0c0", true};
  }
  out.jordan = jordan_type(ad_block(p), tol);
  return out;
}

#define LCAK_INSTANTIATE_AA(T)                                                                   \
  template struct AlmostAbelianParams<T>;                                                        \
  template struct AaConditionResiduals<T>;                                                       \
  template Matrix<T> ad_block(const AlmostAbelianParams<T>&);                                    \
  template LieAlgebra<T> almost_abelian_algebra(const AlmostAbelianParams<T>&);                  \
  template Matrix<T> almost_abelian_J<T>(int);                                                   \
  template AlmostHermitianStructure<T> build_almost_abelian(const AlmostAbelianParams<T>&, double); \
  template Vector<T> lee_form_aa(const AlmostAbelianParams<T>&);                                 \
  template bool is_unimodular_aa(const AlmostAbelianParams<T>&, double);                         \
  template AaConditionResiduals<T> pluricanonical_conditions_aa(const AlmostAbelianParams<T>&);  \
  template ClassLabel jordan_type(const Matrix<T>&, double);                                     \
  template Classification<T> classify_4d(const AlmostAbelianParams<T>&, double);

LCAK_INSTANTIATE_AA(Rational)
LCAK_INSTANTIATE_AA(double)

}  // namespace lcak
