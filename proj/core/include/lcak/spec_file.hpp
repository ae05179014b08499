#pragma once

// Structure descriptions read from JSON text.
//
//   {
//     "name": "A4_1",
//     "dim": 4,
//     "brackets": [ {"i": 2, "j": 4, "coefficients": {"1": "1"}}, ... ],
//     "J": [[0, 0, -1, 0], ...] | "standard" | "almost_abelian",
//     "g": "identity" | [[...], ...],
//     "options": {"tolerance": 1e-9, "arithmetic_mode": "exact" | "float"}
//   }
//
// Indices are 1-based. Matrix rows are listed top to bottom, so column j of
// "J" is J e_j. Scalars are JSON numbers or strings ("1/4", "-0.5", "2e-3").
// "standard" is J e_{2k-1} = e_{2k}; "almost_abelian" is J e_i = e_{2n-i+1}.
// Instead of "brackets", "J" and "g" a file may give
//   "almost_abelian": {"a": 0, "b": [1, 0], "v": [0, 1], "A": [[0, 0], [0, 0]]}
// which builds the adapted almost abelian structure of that data.
//
// Errors are lcak::Error with code ParseError or ValidationError, a reason tag
// (BAD_JSON, MISSING_FIELD, BAD_TYPE, BAD_NUMBER, ZERO_DENOMINATOR, BAD_SHAPE,
// INDEX_OUT_OF_RANGE, UNKNOWN_PRESET, NOT_ANTISYMMETRIC, JACOBI_FAILED,
// DIMENSION_MISMATCH, J_NOT_ACS, G_NOT_SYMMETRIC, G_NOT_PD, G_NOT_J_INVARIANT,
// F_DEGENERATE) and the offending field and line.

#include <optional>
#include <string>
#include <string_view>

#include "lcak/almost_abelian.hpp"

namespace lcak {

struct SpecFile {
  std::string name;
  int dim = 0;
  std::vector<StructureConstant<Rational>> constants;  // 0-based
  Matrix<Rational> J;
  Matrix<Rational> g;
  double tolerance = kDefaultTolerance;
  ArithmeticMode mode = ArithmeticMode::Exact;
  std::optional<AlmostAbelianParams<Rational>> almost_abelian;
  std::string source;  // original text, for error locations
};

SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::string& path);

// Validates the Lie algebra and the structure; errors carry field and line.
template <class T>
AlmostHermitianStructure<T> build_structure(const SpecFile& spec);

}  // namespace lcak
