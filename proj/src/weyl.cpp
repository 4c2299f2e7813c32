#include "taumap/weyl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace taumap {

WeylType WeylType::type_a(int m) {
  if (m < 1) throw InvalidParam("type A rank must be >= 1");
  return {WeylFamily::A, m};
}

WeylType WeylType::type_b(int m) {
  if (m < 0) throw InvalidParam("type B rank must be >= 0");
  return {WeylFamily::B, m};
}

WeylType WeylType::type_d(int m) {
  if (m < 2) throw InvalidParam("type D rank must be >= 2");
  return {WeylFamily::D, m};
}

std::string render(const WeylType& t) {
  switch (t.family) {
    case WeylFamily::A:
      return "A" + std::to_string(t.rank);
    case WeylFamily::B:
      return "B" + std::to_string(t.rank);
    case WeylFamily::D:
      return "D" + std::to_string(t.rank);
    case WeylFamily::F4:
      return "F4";
    case WeylFamily::G2:
      return "G2";
    case WeylFamily::E6:
      return "E6";
    case WeylFamily::trivial:
      return "1";
  }
  throw Error("unreachable");
}

WeylType parse_weyl_type(const std::string& s) {
  if (s == "F4") return WeylType::f4();
  if (s == "G2") return WeylType::g2();
  if (s == "E6") return WeylType::e6();
  if (s == "1") return WeylType::trivial();
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'B' || s[0] == 'D')) {
    int m = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad rank in type name", i);
      m = m * 10 + (s[i] - '0');
      if (m > 1000) throw ParseError("rank out of range", i);
    }
    switch (s[0]) {
      case 'A':
        return WeylType::type_a(m);
      case 'B':
        return WeylType::type_b(m);
      default:
        return WeylType::type_d(m);
    }
  }
  throw ParseError("unrecognized type name '" + s + "'", 0);
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw InvalidParam("partitions: n must be >= 0");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n > 0 ? n : 1);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  if (n < 0) throw InvalidParam("bipartitions: n must be >= 0");
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a) {
    const auto pa = partitions(a);
    const auto pb = partitions(n - a);
    for (const auto& alpha : pa)
      for (const auto& beta : pb) out.emplace_back(alpha, beta);
  }
  return out;
}

const std::vector<NamedLabel>& f4_alphabet() {
  static const std::vector<NamedLabel> table = {
      {1, 0, 0},  {1, 12, 1}, {1, 12, 2}, {1, 24, 0}, {2, 4, 1},
      {2, 4, 2},  {2, 16, 1}, {2, 16, 2}, {4, 1, 0},  {4, 7, 1},
      {4, 7, 2},  {4, 8, 0},  {4, 13, 0}, {6, 6, 1},  {6, 6, 2},
      {8, 3, 1},  {8, 3, 2},  {8, 9, 1},  {8, 9, 2},  {9, 2, 0},
      {9, 6, 1},  {9, 6, 2},  {9, 10, 0}, {12, 4, 0}, {16, 5, 0}};
  return table;
}

const std::vector<NamedLabel>& g2_alphabet() {
  static const std::vector<NamedLabel> table = {{1, 0, 0}, {1, 3, 1},
                                                {1, 3, 2}, {1, 6, 0},
                                                {2, 1, 0}, {2, 2, 0}};
  return table;
}

std::vector<IrrLabel> irr_labels(const WeylType& t) {
  std::vector<IrrLabel> out;
  switch (t.family) {
    case WeylFamily::A:
      for (auto& p : partitions(t.rank + 1)) out.push_back(IrrLabel::of(p));
      return out;
    case WeylFamily::B:
      for (auto& bp : bipartitions(t.rank)) out.push_back(IrrLabel::of(bp));
      return out;
    case WeylFamily::F4:
      for (auto& n : f4_alphabet()) out.push_back(IrrLabel::of(n));
      return out;
    case WeylFamily::G2:
      for (auto& n : g2_alphabet()) out.push_back(IrrLabel::of(n));
      return out;
    case WeylFamily::trivial:
      return {IrrLabel::unit()};
    default:
      throw UnsupportedType("irr_labels: no label set for type " + render(t));
  }
}

WeylType folded_type(const TwistedType& tt) {
  switch (tt.family) {
    case TwistedFamily::twisted_a:
      return WeylType::type_b((tt.n + 1) / 2);
    case TwistedFamily::twisted_d:
      return WeylType::type_b(tt.n - 1);
    case TwistedFamily::twisted_e6:
      return WeylType::f4();
    case TwistedFamily::triple_d4:
      return WeylType::g2();
  }
  throw Error("unreachable");
}

namespace {

std::string join_parts(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
  }

  int integer() {
    if (peek() < '0' || peek() > '9')
      throw ParseError("expected a digit", pos);
    long v = 0;
    while (!eof() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) throw ParseError("number out of range", pos);
      ++pos;
    }
    return static_cast<int>(v);
  }

  // ASCII apostrophe, U+2032 PRIME or U+2033 DOUBLE PRIME.
  int prime_marks() {
    int count = 0;
    while (!eof()) {
      if (accept('\'')) {
        ++count;
      } else if (s.compare(pos, 3, "\xe2\x80\xb2") == 0) {
        pos += 3;
        ++count;
      } else if (s.compare(pos, 3, "\xe2\x80\xb3") == 0) {
        pos += 3;
        count += 2;
      } else {
        break;
      }
      if (count > 2) throw ParseError("too many prime marks", pos);
    }
    return count;
  }

  // Comma-separated positive parts, weakly decreasing; empty list allowed.
  Partition parts() {
    Partition p;
    if (peek() == '|' || peek() == ']') return p;
    while (true) {
      std::size_t at = pos;
      int part = integer();
      if (part < 1) throw ParseError("parts must be positive", at);
      if (!p.empty() && part > p.back())
        throw ParseError("parts must be weakly decreasing", at);
      p.push_back(part);
      if (!accept(',')) break;
    }
    return p;
  }
};

IrrLabel parse_label_syntax(const std::string& s) {
  Cursor c{s};
  if (c.eof()) throw ParseError("empty label", 0);
  IrrLabel label;
  if (c.accept('[')) {
    Partition first = c.parts();
    if (c.accept('|')) {
      Partition second = c.parts();
      c.expect(']', "']'");
      label = IrrLabel::of(Bipartition{std::move(first), std::move(second)});
    } else {
      c.expect(']', "']'");
      label = IrrLabel::of(std::move(first));
    }
  } else {
    NamedLabel n;
    n.degree = c.integer();
    n.primes = c.prime_marks();
    c.expect('_', "'_'");
    n.b = c.integer();
    label = IrrLabel::of(n);
  }
  if (!c.eof()) throw ParseError("trailing characters after label", c.pos);
  return label;
}

bool in_alphabet(const NamedLabel& n, const std::vector<NamedLabel>& alphabet) {
  return std::find(alphabet.begin(), alphabet.end(), n) != alphabet.end();
}

int total_size(const Bipartition& bp) {
  auto sum = [](const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
  };
  return sum(bp.first) + sum(bp.second);
}

}  // namespace

std::string render(const IrrLabel& label) {
  if (const auto* n = label.named()) {
    std::string s = std::to_string(n->degree);
    s.append(n->primes, '\'');
    s += '_';
    s += std::to_string(n->b);
    return s;
  }
  if (const auto* p = label.partition()) return "[" + join_parts(*p) + "]";
  const auto& bp = *label.bipartition();
  return "[" + join_parts(bp.first) + "|" + join_parts(bp.second) + "]";
}

IrrLabel parse_label(const std::string& s) {
  IrrLabel label = parse_label_syntax(s);
  if (const auto* n = label.named()) {
    if (!in_alphabet(*n, f4_alphabet()) && !in_alphabet(*n, g2_alphabet()))
      throw UnknownLabel("no character named " + render(label));
  }
  return label;
}

IrrLabel parse_label(const std::string& s, const WeylType& t) {
  IrrLabel label = parse_label_syntax(s);
  auto reject = [&]() -> IrrLabel {
    throw UnknownLabel(render(label) + " is not a character label of type " +
                       render(t));
  };
  switch (t.family) {
    case WeylFamily::A: {
      const auto* p = label.partition();
      if (!p) return reject();
      if (std::accumulate(p->begin(), p->end(), 0) != t.rank + 1)
        return reject();
      return label;
    }
    case WeylFamily::B: {
      const auto* bp = label.bipartition();
      if (!bp || total_size(*bp) != t.rank) return reject();
      return label;
    }
    case WeylFamily::F4: {
      const auto* n = label.named();
      if (!n || !in_alphabet(*n, f4_alphabet())) return reject();
      return label;
    }
    case WeylFamily::G2: {
      const auto* n = label.named();
      if (!n || !in_alphabet(*n, g2_alphabet())) return reject();
      return label;
    }
    case WeylFamily::trivial: {
      if (label != IrrLabel::unit()) return reject();
      return label;
    }
    default:
      throw UnsupportedType("parse_label: no label set for type " + render(t));
  }
}

}  // namespace taumap
