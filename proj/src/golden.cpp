#include "taumap/golden.hpp"

namespace taumap {

ComponentGroup ComponentGroup::cyclic(int m) {
  if (m < 1) throw InvalidParam("cyclic order must be >= 1");
  return {Kind::cyclic, m};
}

ComponentGroup ComponentGroup::two_torus(int j) {
  if (j < 0) throw InvalidParam("two_torus exponent must be >= 0");
  return {Kind::two_torus, j};
}

int ComponentGroup::ordinary_size() const {
  switch (kind) {
    case Kind::trivial:
      return 1;
    case Kind::cyclic:
      return param;
    case Kind::sym3:
      return 3;
    case Kind::sym4:
      return 5;
    case Kind::two_torus:
      return 1 << param;
  }
  throw Error("unreachable");
}

std::string render(const ComponentGroup& g) {
  switch (g.kind) {
    case ComponentGroup::Kind::trivial:
      return "1";
    case ComponentGroup::Kind::cyclic:
      return "C" + std::to_string(g.param);
    case ComponentGroup::Kind::sym3:
      return "S3";
    case ComponentGroup::Kind::sym4:
      return "S4";
    case ComponentGroup::Kind::two_torus:
      if (g.param == 0) return "1";
      if (g.param == 1) return "C2";
      return "C2^" + std::to_string(g.param);
  }
  throw Error("unreachable");
}

ComponentGroup parse_component_group(const std::string& s) {
  if (s == "1") return ComponentGroup::trivial();
  if (s == "S3") return ComponentGroup::sym3();
  if (s == "S4") return ComponentGroup::sym4();
  if (s.rfind("C2^", 0) == 0) {
    int j = 0;
    for (std::size_t i = 3; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad exponent", i);
      j = j * 10 + (s[i] - '0');
    }
    return ComponentGroup::two_torus(j);
  }
  if (s.size() >= 2 && s[0] == 'C') {
    int m = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad cyclic order", i);
      m = m * 10 + (s[i] - '0');
    }
    return ComponentGroup::cyclic(m);
  }
  throw ParseError("unrecognized component group '" + s + "'", 0);
}

namespace {

IrrLabel named(int degree, int b, int primes) {
  return IrrLabel::of(NamedLabel{degree, b, primes});
}

CSLabel plain(int degree, int b, int primes) {
  return CSLabel::plain(named(degree, b, primes));
}

// Cuspidal entry on the full levi (relative group trivial).
CSLabel full_cusp(const WeylType& levi, int d, int index) {
  return {LeviKind::full, levi, IrrLabel::unit(), d, index};
}

GoldenTable build_2e6() {
  const auto a5 = WeylType::type_a(5);
  const auto e6 = WeylType::e6();
  const CSLabel a5_unit{LeviKind::proper, a5, IrrLabel::of(Partition{2}), 0, 1};
  const CSLabel a5_eps{LeviKind::proper, a5, IrrLabel::of(Partition{1, 1}), 0, 1};

  GoldenTable t{TwistedType::twisted_e6(), {}};
  auto row = [&](int deg, int b, int pr, ComponentGroup box,
                 std::vector<CSLabel> tail) {
    StratumRow r{named(deg, b, pr), box, {plain(deg, b, pr)}};
    for (auto& e : tail) r.entries.push_back(std::move(e));
    t.rows.push_back(std::move(r));
  };
  const auto c2 = ComponentGroup::cyclic(2);
  row(1, 24, 0, ComponentGroup::trivial(), {});
  row(2, 16, 2, ComponentGroup::trivial(), {});
  row(4, 13, 0, c2, {plain(2, 16, 1)});
  row(1, 12, 2, ComponentGroup::trivial(), {});
  row(9, 10, 0, ComponentGroup::trivial(), {});
  row(8, 9, 1, ComponentGroup::trivial(), {});
  row(8, 9, 2, ComponentGroup::trivial(), {});
  row(4, 7, 2, ComponentGroup::trivial(), {});
  row(6, 6, 1, ComponentGroup::trivial(), {});
  row(9, 6, 2, c2, {plain(4, 8, 0)});
  row(16, 5, 0, c2, {plain(4, 7, 1)});
  row(12, 4, 0, ComponentGroup::sym4(),
      {plain(6, 6, 2), plain(1, 12, 1), plain(9, 6, 1), full_cusp(e6, 4, 1)});
  row(8, 3, 1, c2, {a5_eps});
  row(8, 3, 2, c2, {plain(2, 4, 2)});
  row(9, 2, 0, ComponentGroup::trivial(), {});
  row(4, 1, 0, c2, {plain(2, 4, 1)});
  row(1, 0, 0, c2, {a5_unit, full_cusp(e6, 0, 1), full_cusp(e6, 0, 2)});
  return t;
}

GoldenTable build_3d4() {
  const auto d4 = WeylType::type_d(4);
  GoldenTable t{TwistedType::triple_d4(), {}};
  auto row = [&](int deg, int b, int pr, ComponentGroup box,
                 std::vector<CSLabel> tail) {
    StratumRow r{named(deg, b, pr), box, {plain(deg, b, pr)}};
    for (auto& e : tail) r.entries.push_back(std::move(e));
    t.rows.push_back(std::move(r));
  };
  row(1, 6, 0, ComponentGroup::trivial(), {});
  row(1, 3, 2, ComponentGroup::trivial(), {});
  row(2, 2, 0, ComponentGroup::trivial(), {});
  row(2, 1, 0, ComponentGroup::sym3(), {plain(1, 3, 1), full_cusp(d4, 1, 1)});
  row(1, 0, 0, ComponentGroup::trivial(), {full_cusp(d4, 0, 1)});
  return t;
}

}  // namespace

const GoldenTable& golden_table(const TwistedType& tt) {
  static const GoldenTable e6 = build_2e6();
  static const GoldenTable d4 = build_3d4();
  switch (tt.family) {
    case TwistedFamily::twisted_e6:
      return e6;
    case TwistedFamily::triple_d4:
      return d4;
    default:
      throw UnsupportedType("no table for classical type " + render(tt));
  }
}

std::string render_text(const GoldenTable& table) {
  std::string out;
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.entries.size(); ++i) {
      if (i) out += ',';
      out += render(table.tt, row.entries[i]);
    }
    out += " ..... [" + render(row.box) + "]\n";
  }
  return out;
}

const std::string& stored_transcription(const TwistedType& tt) {
  static const std::string text_2e6 =
      "1_24 ..... [1]\n"
      "2''_16 ..... [1]\n"
      "4_13,2'_16 ..... [C2]\n"
      "1''_12 ..... [1]\n"
      "9_10 ..... [1]\n"
      "8'_9 ..... [1]\n"
      "8''_9 ..... [1]\n"
      "4''_7 ..... [1]\n"
      "6'_6 ..... [1]\n"
      "9''_6,4_8 ..... [C2]\n"
      "16_5,4'_7 ..... [C2]\n"
      "12_4,6''_6,1'_12,9'_6,(E6,1,4) ..... [S4]\n"
      "8'_3,(A5,eps,0) ..... [C2]\n"
      "8''_3,2''_4 ..... [C2]\n"
      "9_2 ..... [1]\n"
      "4_1,2'_4 ..... [C2]\n"
      "1_0,(A5,1,0),(E6,1,0)#1,(E6,1,0)#2 ..... [C2]\n";
  static const std::string text_3d4 =
      "1_6 ..... [1]\n"
      "1''_3 ..... [1]\n"
      "2_2 ..... [1]\n"
      "2_1,1'_3,(D4,1,1) ..... [S3]\n"
      "1_0,(D4,1,0) ..... [1]\n";
  switch (tt.family) {
    case TwistedFamily::twisted_e6:
      return text_2e6;
    case TwistedFamily::triple_d4:
      return text_3d4;
    default:
      throw UnsupportedType("no table for classical type " + render(tt));
  }
}

std::uint64_t table_checksum(const GoldenTable& table) {
  const std::string text = render_text(table);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t frozen_checksum(const TwistedType& tt) {
  switch (tt.family) {
    case TwistedFamily::twisted_e6:
      return 0x986A129AF28EEE55ULL;
    case TwistedFamily::triple_d4:
      return 0x784BFABD66A37466ULL;
    default:
      throw UnsupportedType("no table for classical type " + render(tt));
  }
}

}  // namespace taumap
