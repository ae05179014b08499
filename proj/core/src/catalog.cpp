#include "lcak/catalog.hpp"

#include <array>

namespace lcak {

namespace {

using Q = Rational;

// 1-based brackets [e_i, e_j] = value e_k.
LieAlgebra<Q> algebra(int dim, std::initializer_list<std::array<int, 4>> brackets) {
  std::vector<StructureConstant<Q>> cs;
  for (const auto& b : brackets) cs.push_back({b[0] - 1, b[1] - 1, b[2] - 1, Q(b[3])});
  return LieAlgebra<Q>::from_constants(dim, cs);
}

// J e_from = e_to for each 1-based pair, completed by J e_to = -e_from.
Matrix<Q> complex_structure(int dim, std::initializer_list<std::pair<int, int>> pairs) {
  Matrix<Q> j(dim, dim);
  for (const auto& [from, to] : pairs) {
    j(to - 1, from - 1) = Q(1);
    j(from - 1, to - 1) = Q(-1);
  }
  return j;
}

CatalogEntry almost_abelian_entry(std::string name, std::string description, Vector<Q> b, Vector<Q> v) {
  auto p = AlmostAbelianParams<Q>::zero(2);
  p.b = std::move(b);
  p.v = std::move(v);
  return {std::move(name), std::move(description), build_almost_abelian(p), p};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  const Matrix<Q> id = Matrix<Q>::identity(4);
  out.push_back({"A4_1", "[e2,e4]=e1, [e3,e4]=e2; Je1=e3, Je2=e4; g standard",
                 AlmostHermitianStructure<Q>(algebra(4, {{2, 4, 1, 1}, {3, 4, 2, 1}}),
                                             complex_structure(4, {{1, 3}, {2, 4}}), id),
                 std::nullopt});
  out.push_back({"A4_8", "[e2,e3]=e1, [e2,e4]=e2, [e3,e4]=-e3; Je1=e4, Je2=e3; g standard",
                 AlmostHermitianStructure<Q>(algebra(4, {{2, 3, 1, 1}, {2, 4, 2, 1}, {3, 4, 3, -1}}),
                                             complex_structure(4, {{1, 4}, {2, 3}}), id),
                 std::nullopt});
  out.push_back({"abelian_kahler", "abelian R^4; Je1=e2, Je3=e4; g standard",
                 AlmostHermitianStructure<Q>(LieAlgebra<Q>(4), complex_structure(4, {{1, 2}, {3, 4}}), id),
                 std::nullopt});
  out.push_back(almost_abelian_entry("A4_1_almost_abelian",
                                     "almost abelian (a,b,v,A) = (0,(1,0),(0,1),0); b.v = 0", {Q(1), Q(0)},
                                     {Q(0), Q(1)}));
  out.push_back(almost_abelian_entry("A3_4_plus_A1", "almost abelian (a,b,v,A) = (0,(1,0),(1,0),0); b.v > 0",
                                     {Q(1), Q(0)}, {Q(1), Q(0)}));
  out.push_back(almost_abelian_entry("A3_6_plus_A1", "almost abelian (a,b,v,A) = (0,(1,0),(-1,0),0); b.v < 0",
                                     {Q(1), Q(0)}, {Q(-1), Q(0)}));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::ValidationError, "UNKNOWN_ENTRY", "no catalog entry named '" + name + "'");
}

}  // namespace lcak
