#include <doctest.h>

#include <string>

#include "taumap/centralizer.hpp"

using namespace taumap;

namespace {

const TwistedType e6 = TwistedType::twisted_e6();
const TwistedType d4 = TwistedType::triple_d4();

std::string type_of(const TwistedType& tt, int param, RClass r) {
  return render(centralizer_type(tt, param, r));
}

}  // namespace

TEST_CASE("centralizer_type: 2A spot checks") {
  const auto a = TwistedType::twisted_a(2);
  CHECK(type_of(a, 2, RClass::generic) == "C1");
  CHECK(type_of(a, 3, RClass::generic) == "C1xD2");
  CHECK(type_of(a, 4, RClass::generic) == "C3xD2");
  CHECK(type_of(a, 5, RClass::generic) == "C3xB4");
  CHECK(type_of(a, 6, RClass::generic) == "C6xB4");
  CHECK(type_of(a, 4, RClass::char3) == "C3xD2");
  CHECK(type_of(a, 4, RClass::char2) == "FULL");
  CHECK_THROWS_AS((void)centralizer_type(a, 1, RClass::generic), InvalidParam);
}

TEST_CASE("centralizer_type: 2D") {
  const auto d9 = TwistedType::twisted_d(9);
  CHECK(type_of(d9, 3, RClass::generic) == "B4xB4");
  CHECK(type_of(d9, 3, RClass::char3) == "B4xB4");
  CHECK(type_of(d9, 3, RClass::char2) == "FULL");
  CHECK(type_of(TwistedType::twisted_d(25), 5, RClass::generic) == "B12xB12");
  CHECK_THROWS_AS((void)centralizer_type(d9, 4, RClass::generic),
                  InvalidParam);
  CHECK_THROWS_AS((void)centralizer_type(d9, 5, RClass::generic),
                  InvalidParam);  // 25 > 9
}

TEST_CASE("centralizer_type: all eight exceptional cases") {
  CHECK(type_of(e6, 4, RClass::generic) == "F4");
  CHECK(type_of(e6, 4, RClass::char3) == "F4");
  CHECK(type_of(e6, 4, RClass::char2) == "FULL");
  CHECK(type_of(e6, 0, RClass::generic) == "A2xA2xA2");
  CHECK(type_of(e6, 0, RClass::char2) == "A2xA2xA2");
  CHECK(type_of(e6, 0, RClass::char3) == "F4");

  CHECK(type_of(d4, 1, RClass::generic) == "G2");
  CHECK(type_of(d4, 1, RClass::char2) == "G2");
  CHECK(type_of(d4, 1, RClass::char3) == "FULL");
  CHECK(type_of(d4, 0, RClass::generic) == "A1xA1xA1xA1");
  CHECK(type_of(d4, 0, RClass::char3) == "A1xA1xA1xA1");
  CHECK(type_of(d4, 0, RClass::char2) == "G2");

  CHECK_THROWS_AS((void)centralizer_type(e6, 1, RClass::generic),
                  InvalidParam);
  CHECK_THROWS_AS((void)centralizer_type(d4, 4, RClass::generic),
                  InvalidParam);
}

TEST_CASE("centralizer_rank_check: classical sums") {
  const auto a = TwistedType::twisted_a(2);
  const auto k5 = centralizer_rank_check(a, 5);
  CHECK(k5.pass);
  CHECK(k5.a == 3);
  CHECK(k5.b == 4);
  CHECK(k5.factors == "C3xB4");

  const auto k3 = centralizer_rank_check(a, 3);
  CHECK(k3.pass);
  CHECK(k3.a == 1);
  CHECK(k3.b == 2);

  const auto k2 = centralizer_rank_check(a, 2);
  CHECK(k2.pass);
  CHECK(k2.a == 1);
  CHECK(k2.b == 0);
  CHECK(k2.factors == "C1");

  const auto d = centralizer_rank_check(TwistedType::twisted_d(9), 3);
  CHECK(d.pass);
  CHECK(d.a == 4);
  CHECK(d.factors == "B4xB4");

  CHECK(centralizer_rank_check(e6, 4).pass);
  CHECK(centralizer_rank_check(d4, 0).pass);
}

TEST_CASE("centralizer_rank_check: integrality for all valid k <= 40") {
  const auto a = TwistedType::twisted_a(2);
  for (int k = 2; k <= 40; ++k) {
    const auto report = centralizer_rank_check(a, k);
    CHECK(report.pass);
    CHECK(report.a >= 0);
    CHECK(report.b >= 0);
  }
  for (int k = 3; k <= 40; k += 2)
    CHECK(centralizer_rank_check(TwistedType::twisted_d(k * k), k).pass);
}

TEST_CASE("full group appears only in bad characteristic") {
  const auto a = TwistedType::twisted_a(2);
  for (int k = 2; k <= 40; ++k)
    for (RClass r : {RClass::char2, RClass::char3, RClass::generic})
      CHECK(centralizer_type(a, k, r).full_group == (r == RClass::char2));
  for (RClass r : {RClass::char2, RClass::char3, RClass::generic}) {
    CHECK(centralizer_type(e6, 0, r).full_group == false);
    CHECK(centralizer_type(d4, 0, r).full_group == false);
    CHECK(centralizer_type(e6, 4, r).full_group == (r == RClass::char2));
    CHECK(centralizer_type(d4, 1, r).full_group == (r == RClass::char3));
  }
}

TEST_CASE("root type rendering") {
  CHECK(render(RootTypeString::full()) == "FULL");
  CHECK(render(RootTypeString{false, {{RootFamily::C, 1}, {RootFamily::B, 0}}}) ==
        "C1");
  CHECK(render(RootTypeString{false, {{RootFamily::B, 4}, {RootFamily::B, 4}}}) ==
        "B4xB4");
  CHECK(render(RootTypeString{false, {{RootFamily::F4, 4}}}) == "F4");
  CHECK(render(RootTypeString{false, {{RootFamily::G2, 2}}}) == "G2");
}
