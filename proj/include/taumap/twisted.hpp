#pragma once

// The four twisted families: 2A_n (n >= 2), 2D_n (n >= 4), 2E6 and 3D4.
// p is the order of the diagram automorphism (3 for 3D4, 2 otherwise).

#include <string>

#include "taumap/error.hpp"

namespace taumap {

enum class TwistedFamily { twisted_a, twisted_d, twisted_e6, triple_d4 };

struct TwistedType {
  TwistedFamily family;
  int n;  // rank of the untwisted diagram (6 for 2E6, 4 for 3D4)

  static TwistedType twisted_a(int n);
  static TwistedType twisted_d(int n);
  static TwistedType twisted_e6() { return {TwistedFamily::twisted_e6, 6}; }
  static TwistedType triple_d4() { return {TwistedFamily::triple_d4, 4}; }

  int p() const { return family == TwistedFamily::triple_d4 ? 3 : 2; }
  bool classical() const {
    return family == TwistedFamily::twisted_a ||
           family == TwistedFamily::twisted_d;
  }
  bool exceptional() const { return !classical(); }

  friend bool operator==(const TwistedType&, const TwistedType&) = default;
};

// Group spec strings: "2A:5", "2D:9", "2E6", "3D4".
TwistedType parse_twisted(const std::string& s);
std::string render(const TwistedType& tt);

}  // namespace taumap
