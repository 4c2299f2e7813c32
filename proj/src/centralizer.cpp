#include "taumap/centralizer.hpp"

namespace taumap {

RClass parse_r_class(const std::string& s) {
  if (s == "2") return RClass::char2;
  if (s == "3") return RClass::char3;
  if (s == "generic") return RClass::generic;
  throw ParseError("expected one of 2, 3, generic", 0);
}

std::string render(RClass r) {
  switch (r) {
    case RClass::char2:
      return "2";
    case RClass::char3:
      return "3";
    case RClass::generic:
      return "generic";
  }
  throw Error("unreachable");
}

std::string render(const RootTypeString& t) {
  if (t.full_group) return "FULL";
  std::string out;
  for (const auto& [family, rank] : t.factors) {
    if (rank == 0 &&
        (family == RootFamily::B || family == RootFamily::D))
      continue;
    if (!out.empty()) out += 'x';
    switch (family) {
      case RootFamily::A:
        out += "A" + std::to_string(rank);
        break;
      case RootFamily::B:
        out += "B" + std::to_string(rank);
        break;
      case RootFamily::C:
        out += "C" + std::to_string(rank);
        break;
      case RootFamily::D:
        out += "D" + std::to_string(rank);
        break;
      case RootFamily::F4:
        out += "F4";
        break;
      case RootFamily::G2:
        out += "G2";
        break;
    }
  }
  return out;
}

namespace {

// 2 + 4 + ... + top (top even; empty sum for top < 2).
int even_sum(int top) {
  int s = 0;
  for (int i = 2; i <= top; i += 2) s += i;
  return s;
}

// 1 + 3 + ... + top (top odd; empty sum for top < 1).
int odd_sum(int top) {
  int s = 0;
  for (int i = 1; i <= top; i += 2) s += i;
  return s;
}

int exact_half(int twice, const char* what) {
  if (twice % 2 != 0)
    throw Error(std::string("non-integral ") + what +
                "; the case split is broken");
  return twice / 2;
}

void validate_classical_k(const TwistedType& tt, int k) {
  if (tt.family == TwistedFamily::twisted_a) {
    if (k < 2) throw InvalidParam("2A cuspidal parameter requires k >= 2");
  } else {
    if (k < 3 || k % 2 == 0 || k * k > tt.n)
      throw InvalidParam("2D cuspidal parameter requires odd k >= 3 with "
                         "k^2 <= n");
  }
}

void validate_exceptional_d(const TwistedType& tt, int d) {
  const bool ok = tt.family == TwistedFamily::twisted_e6 ? (d == 4 || d == 0)
                                                         : (d == 1 || d == 0);
  if (!ok)
    throw InvalidParam("no cuspidal object with d = " + std::to_string(d) +
                       " in " + render(tt));
}

RootTypeString twisted_a_type(int k, RClass r) {
  if (r == RClass::char2) return RootTypeString::full();
  int a2 = 0, b_rank = 0;
  RootFamily second = RootFamily::D;
  switch (k % 4) {
    case 0:
      a2 = even_sum(k);
      b_rank = exact_half(odd_sum(k - 1), "b");
      second = RootFamily::D;
      break;
    case 1:
      a2 = even_sum(k - 1);
      b_rank = exact_half(odd_sum(k) - 1, "b");
      second = RootFamily::B;
      break;
    case 2:
      a2 = even_sum(k);
      b_rank = exact_half(odd_sum(k - 1) - 1, "b");
      second = RootFamily::B;
      break;
    case 3:
      a2 = even_sum(k - 1);
      b_rank = exact_half(odd_sum(k), "b");
      second = RootFamily::D;
      break;
  }
  const int a = exact_half(a2, "a");
  return {false, {{RootFamily::C, a}, {second, b_rank}}};
}

}  // namespace

RootTypeString centralizer_type(const TwistedType& tt, int param, RClass r) {
  switch (tt.family) {
    case TwistedFamily::twisted_a:
      validate_classical_k(tt, param);
      return twisted_a_type(param, r);
    case TwistedFamily::twisted_d: {
      validate_classical_k(tt, param);
      if (r == RClass::char2) return RootTypeString::full();
      const int a = (param * param - 1) / 2;
      return {false, {{RootFamily::B, a}, {RootFamily::B, a}}};
    }
    case TwistedFamily::twisted_e6:
      validate_exceptional_d(tt, param);
      if (param == 4) {
        if (r == RClass::char2) return RootTypeString::full();
        return {false, {{RootFamily::F4, 4}}};
      }
      if (r == RClass::char3) return {false, {{RootFamily::F4, 4}}};
      return {false,
              {{RootFamily::A, 2}, {RootFamily::A, 2}, {RootFamily::A, 2}}};
    case TwistedFamily::triple_d4:
      validate_exceptional_d(tt, param);
      if (param == 1) {
        if (r == RClass::char3) return RootTypeString::full();
        return {false, {{RootFamily::G2, 2}}};
      }
      if (r == RClass::char2) return {false, {{RootFamily::G2, 2}}};
      return {false,
              {{RootFamily::A, 1},
               {RootFamily::A, 1},
               {RootFamily::A, 1},
               {RootFamily::A, 1}}};
  }
  throw Error("unreachable");
}

RankCheckReport centralizer_rank_check(const TwistedType& tt, int param) {
  RankCheckReport report;
  const auto generic = centralizer_type(tt, param, RClass::generic);
  report.factors = render(generic);
  if (tt.family == TwistedFamily::twisted_a) {
    const int k = param;
    // Closed forms: 2+4+...+2t = t(t+1) and 1+3+...+(2t-1) = t^2.
    int twice_a = 0, b_term = 0;
    bool b_is_odd_sum = false;  // whether b solves 2b+1 = sum
    switch (k % 4) {
      case 0:
        twice_a = (k / 2) * (k / 2 + 1);
        b_term = ((k - 1 + 1) / 2) * ((k - 1 + 1) / 2);
        break;
      case 1:
        twice_a = ((k - 1) / 2) * ((k - 1) / 2 + 1);
        b_term = ((k + 1) / 2) * ((k + 1) / 2);
        b_is_odd_sum = true;
        break;
      case 2:
        twice_a = (k / 2) * (k / 2 + 1);
        b_term = (k / 2) * (k / 2);
        b_is_odd_sum = true;
        break;
      case 3:
        twice_a = ((k - 1) / 2) * ((k - 1) / 2 + 1);
        b_term = ((k + 1) / 2) * ((k + 1) / 2);
        break;
    }
    const int twice_b = b_is_odd_sum ? b_term - 1 : b_term;
    if (twice_a % 2 != 0 || twice_b % 2 != 0) {
      report.pass = false;
      report.detail = "non-integral a or b";
      return report;
    }
    report.a = twice_a / 2;
    report.b = twice_b / 2;
    RootTypeString expected{false,
                            {{RootFamily::C, report.a},
                             {(k % 4 == 0 || k % 4 == 3) ? RootFamily::D
                                                         : RootFamily::B,
                              report.b}}};
    report.pass = expected == generic;
    report.detail = report.pass ? "sums agree" : "factor mismatch";
    return report;
  }
  if (tt.family == TwistedFamily::twisted_d) {
    const int k = param;
    report.a = (k * k - 1) / 2;
    report.pass = 2 * report.a + 1 == k * k &&
                  generic == RootTypeString{false,
                                            {{RootFamily::B, report.a},
                                             {RootFamily::B, report.a}}};
    report.detail = report.pass ? "2a+1 = k^2" : "rank identity fails";
    return report;
  }
  report.pass = true;
  report.detail = "tabulated case";
  return report;
}

}  // namespace taumap
