#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "taumap/weyl.hpp"

using namespace taumap;

TEST_CASE("partitions: fixed small cases") {
  CHECK(partitions(0) == std::vector<Partition>{{}});
  CHECK(partitions(4) == std::vector<Partition>{
                             {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(partitions(6).size() == 11);
}

TEST_CASE("partitions: agree with brute-force enumeration") {
  for (int n = 0; n <= 12; ++n) {
    const auto got = partitions(n);
    const auto want = oracles::brute_partitions(n);
    CHECK(got.size() == want.size());
    CHECK(std::set<Partition>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("partitions: counts match the recurrence up to 30") {
  for (int n = 0; n <= 30; ++n)
    CHECK(static_cast<long long>(partitions(n).size()) ==
          oracles::partition_count(n));
}

TEST_CASE("partitions: shape invariants") {
  for (int n = 0; n <= 15; ++n) {
    const auto all = partitions(n);
    std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& p : all) {
      int sum = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i] >= 1);
        if (i) CHECK(p[i - 1] >= p[i]);
        sum += p[i];
      }
      CHECK(sum == n);
    }
  }
}

TEST_CASE("bipartitions: fixed cases and the convolution identity") {
  CHECK(bipartitions(0) == std::vector<Bipartition>{{{}, {}}});
  CHECK(bipartitions(1) ==
        std::vector<Bipartition>{{{1}, {}}, {{}, {1}}});
  CHECK(bipartitions(3).size() == 10);
  for (int n = 0; n <= 20; ++n) {
    long long want = 0;
    for (int j = 0; j <= n; ++j)
      want += oracles::partition_count(j) * oracles::partition_count(n - j);
    CHECK(static_cast<long long>(bipartitions(n).size()) == want);
  }
}

TEST_CASE("irr_labels: alphabets") {
  const auto g2 = irr_labels(WeylType::g2());
  CHECK(g2.size() == 6);
  CHECK(g2.front() == IrrLabel::of(NamedLabel{1, 0, 0}));
  std::set<std::string> g2_names;
  for (const auto& e : g2) g2_names.insert(render(e));
  CHECK(g2_names == std::set<std::string>{"1_0", "1'_3", "1''_3", "1_6",
                                          "2_1", "2_2"});

  const auto f4 = irr_labels(WeylType::f4());
  CHECK(f4.size() == 25);
  std::set<std::string> distinct;
  std::map<int, int> degree_tally;
  for (const auto& e : f4) {
    distinct.insert(render(e));
    degree_tally[e.named()->degree] += 1;
  }
  CHECK(distinct.size() == 25);
  CHECK(degree_tally == std::map<int, int>{{1, 4},
                                           {2, 4},
                                           {4, 5},
                                           {6, 2},
                                           {8, 4},
                                           {9, 4},
                                           {12, 1},
                                           {16, 1}});
}

TEST_CASE("irr_labels: trivial groups and unsupported types") {
  CHECK(irr_labels(WeylType::type_b(0)) ==
        std::vector<IrrLabel>{IrrLabel::unit()});
  CHECK(irr_labels(WeylType::trivial()) ==
        std::vector<IrrLabel>{IrrLabel::unit()});
  CHECK(irr_labels(WeylType::type_a(2)).size() == 3);
  CHECK(irr_labels(WeylType::type_b(2)).size() == 5);
  CHECK_THROWS_AS((void)irr_labels(WeylType::e6()), UnsupportedType);
  CHECK_THROWS_AS((void)irr_labels(WeylType::type_d(4)), UnsupportedType);
}

TEST_CASE("folded_type: the four families") {
  CHECK(folded_type(TwistedType::twisted_a(2)) == WeylType::type_b(1));
  CHECK(folded_type(TwistedType::twisted_a(3)) == WeylType::type_b(2));
  CHECK(folded_type(TwistedType::twisted_a(4)) == WeylType::type_b(2));
  CHECK(folded_type(TwistedType::twisted_d(4)) == WeylType::type_b(3));
  CHECK(folded_type(TwistedType::twisted_e6()) == WeylType::f4());
  CHECK(folded_type(TwistedType::triple_d4()) == WeylType::g2());
}

TEST_CASE("folded_type: brute-force fixed subgroups of small foldings") {
  auto folded_order = [](const TwistedType& tt) -> long long {
    const auto folded = folded_type(tt);
    if (folded.family == WeylFamily::B)
      return oracles::weyl_order_b(folded.rank);
    REQUIRE(folded == WeylType::g2());
    return 12;
  };

  for (int n : {2, 3, 4}) {
    const auto g = oracles::a_root_group(n);
    CHECK(oracles::fixed_subgroup_order(g, oracles::a_flip_perm(g, n)) ==
          folded_order(TwistedType::twisted_a(n)));
  }
  {
    const auto g = oracles::d_root_group(4);
    CHECK(oracles::fixed_subgroup_order(g, oracles::d_flip_perm(g, 4)) ==
          folded_order(TwistedType::twisted_d(4)));
    CHECK(oracles::fixed_subgroup_order(g, oracles::d4_triality_perm(g)) ==
          folded_order(TwistedType::triple_d4()));
  }
}

TEST_CASE("parse_label: named labels") {
  const IrrLabel l = parse_label("8''_9");
  REQUIRE(l.named() != nullptr);
  CHECK(l.named()->degree == 8);
  CHECK(l.named()->b == 9);
  CHECK(l.named()->primes == 2);
  CHECK(parse_label("1_0") == IrrLabel::of(NamedLabel{1, 0, 0}));
  CHECK(parse_label("2\xe2\x80\xb2_16") == parse_label("2'_16"));
  CHECK(parse_label("6\xe2\x80\xb3_6") == parse_label("6''_6"));
  CHECK_THROWS_AS((void)parse_label("3_9", WeylType::f4()), UnknownLabel);
  CHECK_THROWS_AS((void)parse_label("3_9"), UnknownLabel);
  CHECK_THROWS_AS((void)parse_label("1_6", WeylType::f4()), UnknownLabel);
  CHECK(parse_label("1_6", WeylType::g2()) == IrrLabel::of(NamedLabel{1, 6, 0}));
}

TEST_CASE("parse_label: partitions and bipartitions") {
  CHECK(parse_label("[3,1]") == IrrLabel::of(Partition{3, 1}));
  CHECK(parse_label("[]") == IrrLabel::of(Partition{}));
  CHECK(parse_label("[|]") == IrrLabel::unit());
  CHECK(parse_label("[2,1|1]") ==
        IrrLabel::of(Bipartition{{2, 1}, {1}}));
  CHECK(parse_label("[|1,1]") == IrrLabel::of(Bipartition{{}, {1, 1}}));
  CHECK(parse_label("[3,1]", WeylType::type_a(3)) ==
        IrrLabel::of(Partition{3, 1}));
  CHECK_THROWS_AS((void)parse_label("[3,1]", WeylType::type_a(2)),
                  UnknownLabel);
  CHECK_THROWS_AS((void)parse_label("[2|1]", WeylType::type_b(2)),
                  UnknownLabel);
}

TEST_CASE("parse_label: malformed input reports a position") {
  auto pos_of = [](const std::string& s) -> std::size_t {
    try {
      (void)parse_label(s);
    } catch (const ParseError& e) {
      return e.pos;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("8''9") == 3);
  CHECK(pos_of("[1,3]") == 3);
  CHECK(pos_of("[2,1,|]") == 5);
  CHECK(pos_of("8''_") == 4);
  CHECK(pos_of("x_1") == 0);
  CHECK(pos_of("[3,1") == 4);
  CHECK(pos_of("1_0junk") == 3);
}

TEST_CASE("parse_label round-trips every generated label") {
  const std::vector<WeylType> types = {
      WeylType::type_a(1), WeylType::type_a(4), WeylType::type_b(0),
      WeylType::type_b(3), WeylType::f4(),      WeylType::g2(),
      WeylType::trivial()};
  for (const auto& t : types)
    for (const auto& label : irr_labels(t)) {
      CHECK(parse_label(render(label), t) == label);
      if (label.named()) CHECK(parse_label(render(label)) == label);
    }
}
