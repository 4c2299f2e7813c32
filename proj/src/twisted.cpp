#include "taumap/twisted.hpp"

namespace taumap {

TwistedType TwistedType::twisted_a(int n) {
  if (n < 2) throw InvalidParam("2A requires n >= 2");
  return {TwistedFamily::twisted_a, n};
}

TwistedType TwistedType::twisted_d(int n) {
  if (n < 4) throw InvalidParam("2D requires n >= 4");
  return {TwistedFamily::twisted_d, n};
}

TwistedType parse_twisted(const std::string& s) {
  if (s == "2E6") return TwistedType::twisted_e6();
  if (s == "3D4") return TwistedType::triple_d4();
  if (s.size() >= 4 && (s.rfind("2A:", 0) == 0 || s.rfind("2D:", 0) == 0)) {
    int n = 0;
    for (std::size_t i = 3; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad rank in group spec", i);
      n = n * 10 + (s[i] - '0');
      if (n > 1000) throw ParseError("rank out of range", i);
    }
    return s[1] == 'A' ? TwistedType::twisted_a(n) : TwistedType::twisted_d(n);
  }
  throw ParseError("expected one of 2A:<n>, 2D:<n>, 2E6, 3D4", 0);
}

std::string render(const TwistedType& tt) {
  switch (tt.family) {
    case TwistedFamily::twisted_a:
      return "2A:" + std::to_string(tt.n);
    case TwistedFamily::twisted_d:
      return "2D:" + std::to_string(tt.n);
    case TwistedFamily::twisted_e6:
      return "2E6";
    case TwistedFamily::triple_d4:
      return "3D4";
  }
  throw Error("unreachable");
}

}  // namespace taumap
