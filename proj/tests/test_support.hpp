#pragma once

#include <gtest/gtest.h>

#include <string>
#include <tuple>
#include <vector>

#include "lcak/catalog.hpp"
#include "lcak/fuzz.hpp"

namespace lcak::test {

using Q = Rational;

inline Q q(const std::string& text) { return ScalarTraits<Q>::parse(text); }

inline Vector<Q> e(int dim, int i) { return unit_vector<Q>(dim, i); }

inline Vector<Q> vec(std::initializer_list<const char*> xs) {
  Vector<Q> v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

inline Matrix<Q> mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector<Q>> out;
  for (const auto& r : rows) out.push_back(vec(r));
  return Matrix<Q>::from_rows(out, static_cast<int>(out.front().size()));
}

// 0-based (i, j, k, c) meaning [e_i, e_j] += c e_k.
inline LieAlgebra<Q> algebra(int dim, const std::vector<std::tuple<int, int, int, long>>& brackets) {
  std::vector<StructureConstant<Q>> cs;
  for (const auto& [i, j, k, c] : brackets) cs.push_back({i, j, k, Q(c)});
  return LieAlgebra<Q>::from_constants(dim, cs);
}

// [e2,e4]=e1, [e3,e4]=e2 (1-based labels).
inline LieAlgebra<Q> a41_algebra() { return algebra(4, {{1, 3, 0, 1}, {2, 3, 1, 1}}); }
// [e2,e3]=e1, [e2,e4]=e2, [e3,e4]=-e3.
inline LieAlgebra<Q> a48_algebra() { return algebra(4, {{1, 2, 0, 1}, {1, 3, 1, 1}, {2, 3, 2, -1}}); }

inline const AlmostHermitianStructure<Q>& a41() { return catalog_entry("A4_1").structure; }
inline const AlmostHermitianStructure<Q>& a48() { return catalog_entry("A4_8").structure; }
inline const AlmostHermitianStructure<Q>& kahler() { return catalog_entry("abelian_kahler").structure; }

inline Matrix<Q> standard_J(int dim) {
  Matrix<Q> j(dim, dim);
  for (int k = 0; k + 1 < dim; k += 2) {
    j(k + 1, k) = Q(1);
    j(k, k + 1) = Q(-1);
  }
  return j;
}

inline AlmostHermitianStructure<double> to_float(const AlmostHermitianStructure<Q>& s, double tol = 1e-9) {
  return AlmostHermitianStructure<double>(s.algebra().cast<double>(), matrix_cast<double>(s.J()),
                                          matrix_cast<double>(s.g()), tol);
}

inline Matrix<Q> random_antisymmetric(Rng& rng, int dim) {
  Matrix<Q> m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = random_small(rng, 2);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline KForm<Q> random_form(Rng& rng, int dim, int degree) {
  KForm<Q> f(dim, degree);
  for (int p = 0; p < f.size(); ++p) f[p] = random_small(rng, 2);
  return f;
}

inline Rng rng_for(int test_seed, int sample) { return Rng(sample_seed(static_cast<std::uint64_t>(test_seed), sample)); }

}  // namespace lcak::test
