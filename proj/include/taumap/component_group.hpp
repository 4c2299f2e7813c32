#pragma once

// Symbolic component groups attached to strata: 1, C_m, S3, S4, or a
// product of j copies of C_2 (the classical case, data supplied externally).

#include <string>

#include "taumap/error.hpp"

namespace taumap {

struct ComponentGroup {
  enum class Kind { trivial, cyclic, sym3, sym4, two_torus };

  Kind kind = Kind::trivial;
  int param = 0;  // m for cyclic, j for two_torus

  static ComponentGroup trivial() { return {Kind::trivial, 0}; }
  static ComponentGroup cyclic(int m);
  static ComponentGroup sym3() { return {Kind::sym3, 0}; }
  static ComponentGroup sym4() { return {Kind::sym4, 0}; }
  static ComponentGroup two_torus(int j);

  // Number of irreducible representations.
  int ordinary_size() const;

  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

// "1", "C2", "S3", "S4"; products of C_2 as "C2^j" (j >= 2).
std::string render(const ComponentGroup& g);
ComponentGroup parse_component_group(const std::string& s);

}  // namespace taumap
