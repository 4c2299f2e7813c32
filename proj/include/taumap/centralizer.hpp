#pragma once

// Type of the identity component of the centralizer of the semisimple part
// of a cuspidal support point, as a function of the twisted type, the
// cuspidal parameter (k for classical, d for exceptional) and the
// characteristic class of the base field.

#include <string>
#include <vector>

#include "taumap/error.hpp"
#include "taumap/twisted.hpp"

namespace taumap {

// Only "r = 2 or not" and "r = 3 or not" matter; generic covers every other
// prime and characteristic zero.
enum class RClass { char2, char3, generic };

RClass parse_r_class(const std::string& s);
std::string render(RClass r);

enum class RootFamily { A, B, C, D, F4, G2 };

struct RootTypeString {
  bool full_group = false;
  std::vector<std::pair<RootFamily, int>> factors;

  static RootTypeString full() { return {true, {}}; }

  friend bool operator==(const RootTypeString&,
                         const RootTypeString&) = default;
};

// Factors joined by `x` in stored order, rank-0 B/D factors dropped,
// e.g. "C3xD2", "B4xB4", "A2xA2xA2"; "FULL" for the whole group.
std::string render(const RootTypeString& t);

// The case table:
//   2A, r != 2: k mod 4 selects C_a x D_b or C_a x B_b with 2a and 2b (or
//               2b+1) the sums 2+4+... and 1+3+... up to k or k-1;
//               r = 2 gives the full group.
//   2D, r != 2: B_a x B_a with 2a+1 = k^2; r = 2 gives the full group.
//   2E6: (d=4, r!=2) F4; (d=4, r=2) full; (d=0, r!=3) A2xA2xA2; (d=0, r=3) F4.
//   3D4: (d=1, r!=3) G2; (d=1, r=3) full; (d=0, r!=2) A1^4; (d=0, r=2) G2.
RootTypeString centralizer_type(const TwistedType& tt, int param, RClass r);

struct RankCheckReport {
  int a = -1;  // -1 where not applicable
  int b = -1;
  std::string factors;
  bool pass = false;
  std::string detail;
};

// Recomputes the classical sums in closed form, confirms integrality of a
// and b, and cross-checks the factors against centralizer_type.
RankCheckReport centralizer_rank_check(const TwistedType& tt, int param);

}  // namespace taumap
