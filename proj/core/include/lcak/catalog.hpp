#pragma once

// Built-in structures: the two explicit LCAK examples, the flat Kähler
// structure on R^4 and the three almost-abelian targets of the 4-dimensional
// classification, each with an adapted (J, g).

#include <optional>
#include <string>
#include <vector>

#include "lcak/almost_abelian.hpp"

namespace lcak {

struct CatalogEntry {
  std::string name;
  std::string description;
  AlmostHermitianStructure<Rational> structure;
  std::optional<AlmostAbelianParams<Rational>> almost_abelian;
};

const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();

// Throws ValidationError(UNKNOWN_ENTRY).
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace lcak
