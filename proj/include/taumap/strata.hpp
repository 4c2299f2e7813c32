#pragma once

// Strata labels, component groups c(E), the representation sets c(E)*, and
// the fibre-law verification: over every stratum E the fibre has exactly
// |c(E)*| elements. c(E)* is the full set of irreducibles of c(E) except at
// the unit stratum of 2E6/3D4, where it collects the faithful irreducibles
// of C_m for m in {1,2,3} resp. {1,2}.

#include <string>
#include <utility>
#include <vector>

#include "taumap/tau.hpp"

namespace taumap {

struct CStarDescriptor {
  enum class Mode { ordinary, special_unit };

  Mode mode = Mode::ordinary;
  std::vector<int> moduli;  // special_unit only
  int size = 0;

  friend bool operator==(const CStarDescriptor&,
                         const CStarDescriptor&) = default;
};

// Row-head labels in table order (17 for 2E6, 5 for 3D4); UnsupportedType
// for classical types, whose Irr_* needs external Springer data.
std::vector<IrrLabel> strata(const TwistedType& tt);

// The boxed group of E's row; UnknownStratum if E heads no row.
ComponentGroup component_group(const TwistedType& tt, const IrrLabel& e);

CStarDescriptor c_star(const TwistedType& tt, const IrrLabel& e);

// Names for the elements of c(E)*, in the declared order used to build the
// (non-canonical) matching with fibre entries.
std::vector<std::string> c_star_names(const CStarDescriptor& desc,
                                      const ComponentGroup& box);

struct FiberLawRow {
  IrrLabel stratum;
  int fiber_size = 0;
  int c_star_size = 0;
  bool pass = false;
  // i-th fibre entry paired with i-th c(E)* element; only when sizes match.
  std::vector<std::pair<std::string, std::string>> matching;
};

struct FiberLawReport {
  std::vector<FiberLawRow> rows;
  int total_fibers = 0;
  int total_c_star = 0;
  int total_labels = 0;  // |CS'(tt)|
  bool pass = false;
};

FiberLawReport verify_fiber_law(const GoldenTable& table);
FiberLawReport verify_fiber_law(const TwistedType& tt);

}  // namespace taumap
