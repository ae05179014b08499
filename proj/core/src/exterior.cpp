#include "lcak/exterior.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>

namespace lcak {

namespace {

MultiIndexTable build_table(int dim) {
  MultiIndexTable t;
  t.dim = dim;
  t.masks.assign(dim + 1, {});
  t.position.assign(std::size_t(1) << dim, 0);
  // Lexicographic order on sorted index sequences.
  std::vector<int> idx;
  for (int k = 0; k <= dim; ++k) {
    idx.resize(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      IndexMask m = 0;
      for (int i : idx) m |= IndexMask(1) << i;
      t.position[m] = static_cast<int>(t.masks[k].size());
      t.masks[k].push_back(m);
      int p = k - 1;
      while (p >= 0 && idx[p] == dim - k + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return t;
}

int popcount_below(IndexMask m, int bit) {
  return std::popcount(m & ((IndexMask(1) << bit) - 1));
}

// Sign of the shuffle sorting (indices of a) followed by (indices of b).
int merge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  for (IndexMask bb = b; bb; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    inversions += std::popcount(a >> j) - ((a >> j) & 1);
  }
  return (inversions & 1) ? -1 : 1;
}

// Sign and mask of e^{i1} ^ ... ^ e^{ik}; returns sign 0 for a repeated index.
std::pair<int, IndexMask> sequence_sign(const std::vector<int>& seq) {
  IndexMask m = 0;
  int inversions = 0;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    const IndexMask bit = IndexMask(1) << seq[p];
    if (m & bit) return {0, 0};
    inversions += std::popcount(m >> seq[p]);
    m |= bit;
  }
  return {(inversions & 1) ? -1 : 1, m};
}

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxFormDimension)
    fail(ErrorCode::DimensionMismatch, "form dimension outside supported range");
}

template <class T>
void check_same(const KForm<T>& a, const KForm<T>& b, const char* what) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": forms of different dimension or degree");
}

}  // namespace

const MultiIndexTable& multi_indices(int dim) {
  check_dim(dim);
  static std::array<MultiIndexTable, kMaxFormDimension + 1> tables;
  static std::array<std::once_flag, kMaxFormDimension + 1> flags;
  std::call_once(flags[dim], [dim] { tables[dim] = build_table(dim); });
  return tables[dim];
}

std::vector<int> mask_indices(IndexMask mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

IndexMask indices_mask(const std::vector<int>& indices) {
  IndexMask m = 0;
  for (int i : indices) m |= IndexMask(1) << i;
  return m;
}

template <class T>
KForm<T>::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  check_dim(dim);
  if (degree < 0 || degree > dim) {
    // Forms of degree above the dimension are identically zero.
    degree_ = degree < 0 ? 0 : degree;
    return;
  }
  coeffs_.assign(multi_indices(dim).count(degree), T(0));
}

template <class T>
KForm<T> KForm<T>::scalar(int dim, const T& value) {
  KForm f(dim, 0);
  f[0] = value;
  return f;
}

template <class T>
KForm<T> KForm<T>::basis(int dim, const std::vector<int>& indices) {
  KForm f(dim, static_cast<int>(indices.size()));
  for (int i : indices)
    if (i < 0 || i >= dim) fail(ErrorCode::IndexOutOfRange, "form index out of range");
  auto [sign, mask] = sequence_sign(indices);
  if (sign != 0) f.add_to(mask, T(sign));
  return f;
}

template <class T>
KForm<T> KForm<T>::one_form(const Vector<T>& coefficients) {
  KForm f(static_cast<int>(coefficients.size()), 1);
  for (int i = 0; i < f.dim_; ++i) f.coeffs_[i] = coefficients[i];
  return f;
}

template <class T>
KForm<T> KForm<T>::from_matrix(const Matrix<T>& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "2-form from non-square matrix");
  KForm f(m.rows(), 2);
  const auto& tab = multi_indices(f.dim_);
  for (int p = 0; p < f.size(); ++p) {
    const auto idx = mask_indices(tab.masks[2][p]);
    f.coeffs_[p] = (m(idx[0], idx[1]) - m(idx[1], idx[0])) / T(2);
  }
  return f;
}

template <class T>
T KForm<T>::coefficient(const std::vector<int>& sorted_indices) const {
  return coefficient_mask(indices_mask(sorted_indices));
}

template <class T>
T KForm<T>::coefficient_mask(IndexMask mask) const {
  if (std::popcount(mask) != degree_ || coeffs_.empty()) return T(0);
  return coeffs_[multi_indices(dim_).position[mask]];
}

template <class T>
void KForm<T>::add_to(IndexMask mask, const T& value) {
  if (coeffs_.empty()) return;
  coeffs_[multi_indices(dim_).position[mask]] += value;
}

template <class T>
Vector<T> KForm<T>::to_vector() const {
  if (degree_ != 1) fail(ErrorCode::DimensionMismatch, "to_vector on a form of degree != 1");
  return coeffs_;
}

template <class T>
Matrix<T> KForm<T>::to_matrix() const {
  if (degree_ != 2) fail(ErrorCode::DimensionMismatch, "to_matrix on a form of degree != 2");
  Matrix<T> m(dim_, dim_);
  for (int p = 0; p < size(); ++p) {
    const auto idx = mask_indices(mask(p));
    m(idx[0], idx[1]) = coeffs_[p];
    m(idx[1], idx[0]) = -coeffs_[p];
  }
  return m;
}

template <class T>
T KForm<T>::evaluate(const std::vector<Vector<T>>& vectors) const {
  if (static_cast<int>(vectors.size()) != degree_)
    fail(ErrorCode::DimensionMismatch, "evaluate: number of vectors differs from degree");
  if (coeffs_.empty()) return T(0);
  KForm cur = *this;
  for (const auto& v : vectors) cur = contract(v, cur);
  return cur[0];
}

template <class T>
bool KForm<T>::is_zero(double tol) const {
  return is_zero_vector(coeffs_, tol);
}

template <class T>
T KForm<T>::max_abs() const {
  return lcak::max_abs(coeffs_);
}

template <class T>
KForm<T>& KForm<T>::operator+=(const KForm& o) {
  check_same(*this, o, "sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

template <class T>
KForm<T>& KForm<T>::operator-=(const KForm& o) {
  check_same(*this, o, "difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

template <class T>
KForm<T>& KForm<T>::operator*=(const T& s) {
  for (auto& x : coeffs_) x *= s;
  return *this;
}

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "wedge of forms on different algebras");
  KForm<T> out(a.dim(), a.degree() + b.degree());
  if (out.size() == 0) return out;
  for (int p = 0; p < a.size(); ++p) {
    if (a[p] == 0) continue;
    const IndexMask ma = a.mask(p);
    for (int q = 0; q < b.size(); ++q) {
      if (b[q] == 0) continue;
      const IndexMask mb = b.mask(q);
      if (ma & mb) continue;
      const T v = a[p] * b[q];
      out.add_to(ma | mb, merge_sign(ma, mb) > 0 ? v : T(-v));
    }
  }
  return out;
}

template <class T>
KForm<T> contract(const Vector<T>& x, const KForm<T>& alpha) {
  if (static_cast<int>(x.size()) != alpha.dim()) fail(ErrorCode::DimensionMismatch, "contract: vector length");
  if (alpha.degree() == 0) return KForm<T>(alpha.dim(), 0) * T(0);
  KForm<T> out(alpha.dim(), alpha.degree() - 1);
  for (int p = 0; p < alpha.size(); ++p) {
    if (alpha[p] == 0) continue;
    const IndexMask m = alpha.mask(p);
    for (IndexMask mm = m; mm; mm &= mm - 1) {
      const int a = std::countr_zero(mm);
      if (x[a] == 0) continue;
      const T v = x[a] * alpha[p];
      out.add_to(m & ~(IndexMask(1) << a), (popcount_below(m, a) & 1) ? T(-v) : v);
    }
  }
  return out;
}

template <class T>
KForm<T> d(const LieAlgebra<T>& alg, const KForm<T>& alpha) {
  const int n = alg.dim();
  if (alpha.dim() != n) fail(ErrorCode::DimensionMismatch, "d: form and algebra dimensions differ");
  KForm<T> out(n, alpha.degree() + 1);
  if (out.size() == 0) return out;
  // d e^k = -sum_{a<b} c^k_ab e^{ab}; d is an antiderivation.
  for (int p = 0; p < alpha.size(); ++p) {
    if (alpha[p] == 0) continue;
    const auto idx = mask_indices(alpha.mask(p));
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const int k = idx[s];
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const T& cab = alg.c(a, b, k);
          if (cab == 0) continue;
          std::vector<int> seq;
          seq.reserve(idx.size() + 1);
          seq.insert(seq.end(), idx.begin(), idx.begin() + s);
          seq.push_back(a);
          seq.push_back(b);
          seq.insert(seq.end(), idx.begin() + s + 1, idx.end());
          auto [sign, mask] = sequence_sign(seq);
          if (sign == 0) continue;
          if (s & 1) sign = -sign;
          const T v = alpha[p] * cab;
          out.add_to(mask, sign > 0 ? T(-v) : v);
        }
    }
  }
  return out;
}

template <class T>
KForm<T> derivation_action(const Matrix<T>& m, const KForm<T>& alpha) {
  const int n = alpha.dim();
  KForm<T> out(n, alpha.degree());
  // e^{i1..ik}(.., M Y_s, ..) replaces e^{i_s} by sum_j M(i_s, j) e^j.
  for (int p = 0; p < alpha.size(); ++p) {
    if (alpha[p] == 0) continue;
    auto idx = mask_indices(alpha.mask(p));
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const int i = idx[s];
      for (int j = 0; j < n; ++j) {
        if (m(i, j) == 0) continue;
        auto seq = idx;
        seq[s] = j;
        auto [sign, mask] = sequence_sign(seq);
        if (sign == 0) continue;
        const T v = alpha[p] * m(i, j);
        out.add_to(mask, sign > 0 ? v : T(-v));
      }
    }
  }
  return out;
}

template <class T>
KForm<T> lie_derivative(const LieAlgebra<T>& alg, const Vector<T>& x, const KForm<T>& alpha) {
  KForm<T> out = contract(x, d(alg, alpha));
  if (alpha.degree() > 0) out += d(alg, contract(x, alpha));
  return out;
}

template <class T>
KForm<T> lie_derivative_direct(const LieAlgebra<T>& alg, const Vector<T>& x, const KForm<T>& alpha) {
  return -derivation_action(alg.ad(x), alpha);
}

template <class T>
Matrix<T> form_gram(const Matrix<T>& ginv, int degree) {
  const int n = ginv.rows();
  const auto& tab = multi_indices(n);
  const int count = tab.count(degree);
  Matrix<T> gram(count, count);
  for (int p = 0; p < count; ++p) {
    const auto ip = mask_indices(tab.masks[degree][p]);
    for (int q = p; q < count; ++q) {
      const auto iq = mask_indices(tab.masks[degree][q]);
      Matrix<T> minor(degree, degree);
      for (int a = 0; a < degree; ++a)
        for (int b = 0; b < degree; ++b) minor(a, b) = ginv(ip[a], iq[b]);
      gram(p, q) = degree == 0 ? T(1) : determinant(minor);
      gram(q, p) = gram(p, q);
    }
  }
  return gram;
}

template <class T>
T form_inner_product(const KForm<T>& a, const KForm<T>& b, const Matrix<T>& ginv) {
  check_same(a, b, "inner product");
  if (a.size() == 0) return T(0);
  const Matrix<T> gram = form_gram(ginv, a.degree());
  return bilinear(a.coefficients(), gram, b.coefficients());
}

template <class T>
T top_coefficient(const KForm<T>& top) {
  if (top.degree() != top.dim()) fail(ErrorCode::DimensionMismatch, "top_coefficient: form is not of top degree");
  return top[0];
}

template <class T>
KForm<T> power(const KForm<T>& alpha, int m) {
  KForm<T> out = KForm<T>::scalar(alpha.dim(), T(1));
  for (int i = 0; i < m; ++i) out = wedge(out, alpha);
  return out;
}

template <class T>
KForm<T> hodge_star(const KForm<T>& alpha, const Matrix<T>& ginv, const T& vol_coef) {
  const int n = alpha.dim();
  const int k = alpha.degree();
  KForm<T> out(n, n - k);
  const IndexMask full = n == 32 ? ~IndexMask(0) : ((IndexMask(1) << n) - 1);
  const Matrix<T> gram = form_gram(ginv, k);
  for (int p = 0; p < alpha.size(); ++p) {
    // <e^I, alpha>
    T ip(0);
    for (int q = 0; q < alpha.size(); ++q)
      if (alpha[q] != 0) ip += gram(p, q) * alpha[q];
    if (ip == 0) continue;
    const IndexMask mi = alpha.mask(p);
    const IndexMask mc = full & ~mi;
    const T v = ip * vol_coef;
    out.add_to(mc, merge_sign(mi, mc) > 0 ? v : T(-v));
  }
  return out;
}

#define LCAK_INSTANTIATE_EXTERIOR(T)                                                         \
  template class KForm<T>;                                                                   \
  template KForm<T> wedge(const KForm<T>&, const KForm<T>&);                                 \
  template KForm<T> contract(const Vector<T>&, const KForm<T>&);                             \
  template KForm<T> d(const LieAlgebra<T>&, const KForm<T>&);                                \
  template KForm<T> derivation_action(const Matrix<T>&, const KForm<T>&);                    \
  template KForm<T> lie_derivative(const LieAlgebra<T>&, const Vector<T>&, const KForm<T>&); \
  template KForm<T> lie_derivative_direct(const LieAlgebra<T>&, const Vector<T>&,            \
                                          const KForm<T>&);                                  \
  template Matrix<T> form_gram(const Matrix<T>&, int);                                       \
  template T form_inner_product(const KForm<T>&, const KForm<T>&, const Matrix<T>&);         \
  template T top_coefficient(const KForm<T>&);                                               \
  template KForm<T> power(const KForm<T>&, int);                                             \
  template KForm<T> hodge_star(const KForm<T>&, const Matrix<T>&, const T&);

LCAK_INSTANTIATE_EXTERIOR(Rational)
LCAK_INSTANTIATE_EXTERIOR(double)

}  // namespace lcak
