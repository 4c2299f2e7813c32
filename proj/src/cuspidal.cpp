#include "taumap/cuspidal.hpp"

#include <algorithm>
#include <numeric>

namespace taumap {

namespace {

CuspidalLevi empty_levi(const TwistedType& tt) {
  return {LeviKind::empty, WeylType::trivial(), folded_type(tt),
          {{0, 1, UnipotentCase::i}}};
}

CuspidalDatum unspecified_singleton() {
  return {std::nullopt, 1, UnipotentCase::i};
}

}  // namespace

std::vector<CuspidalLevi> cuspidal_levis(const TwistedType& tt) {
  std::vector<CuspidalLevi> out;
  out.push_back(empty_levi(tt));
  switch (tt.family) {
    case TwistedFamily::twisted_a:
      for (int k = 2;; ++k) {
        const int m = k * (k + 1) / 2 - 1;  // levi rank
        if (m > tt.n) break;
        if ((tt.n - m) % 2 != 0) continue;
        out.push_back({LeviKind::proper, WeylType::type_a(m),
                       WeylType::type_b((tt.n - m) / 2),
                       {unspecified_singleton()}});
      }
      break;
    case TwistedFamily::twisted_d:
      for (int k = 3; k * k <= tt.n; k += 2)
        out.push_back({LeviKind::proper, WeylType::type_d(k * k),
                       WeylType::type_b(tt.n - k * k),
                       {unspecified_singleton()}});
      break;
    case TwistedFamily::twisted_e6:
      out.push_back({LeviKind::proper, WeylType::type_a(5),
                     WeylType::type_a(1),
                     {{0, 1, UnipotentCase::i}}});
      out.push_back({LeviKind::full, WeylType::e6(), WeylType::trivial(),
                     {{4, 1, UnipotentCase::i}, {0, 2, UnipotentCase::ii}}});
      break;
    case TwistedFamily::triple_d4:
      out.push_back({LeviKind::full, WeylType::type_d(4), WeylType::trivial(),
                     {{1, 1, UnipotentCase::i}, {0, 1, UnipotentCase::ii}}});
      break;
  }
  return out;
}

std::vector<CS2Pair> enumerate_cs2(const TwistedType& tt) {
  if (!tt.classical())
    throw UnsupportedType("CS'' is defined for the classical types only");
  std::vector<CS2Pair> out;
  for (const auto& levi : cuspidal_levis(tt))
    for (auto& e : irr_labels(levi.relative_type)) out.push_back({levi, e});
  return out;
}

std::vector<CSLabel> enumerate_cs_prime(const TwistedType& tt) {
  std::vector<CSLabel> out;
  for (const auto& levi : cuspidal_levis(tt)) {
    const auto chars = irr_labels(levi.relative_type);
    for (const auto& datum : levi.d_values)
      for (const auto& e : chars)
        for (int i = 1; i <= datum.count; ++i)
          out.push_back({levi.kind, levi.levi_type, e, datum.d, i});
  }
  return out;
}

std::optional<CuspidalLevi> find_levi(const TwistedType& tt, LeviKind kind,
                                      const WeylType& levi_type) {
  for (const auto& levi : cuspidal_levis(tt))
    if (levi.kind == kind &&
        (kind == LeviKind::empty || levi.levi_type == levi_type))
      return levi;
  return std::nullopt;
}

int cuspidal_count(const TwistedType& tt, const CuspidalLevi& levi, int d) {
  const auto levis = cuspidal_levis(tt);
  if (std::find(levis.begin(), levis.end(), levi) == levis.end())
    throw UnknownLevi("levi does not belong to " + render(tt));
  for (const auto& datum : levi.d_values)
    if (datum.d && *datum.d == d) return datum.count;
  return 0;
}

UnipotentCase unipotent_support_case(const TwistedType& tt, int d) {
  for (const auto& levi : cuspidal_levis(tt)) {
    if (levi.kind != LeviKind::full) continue;
    for (const auto& datum : levi.d_values)
      if (datum.d && *datum.d == d) return datum.support_case;
  }
  throw UnknownD("no cuspidal object with d = " + std::to_string(d) + " in " +
                 render(tt));
}

namespace {

// "1" and "eps" abbreviate the trivial and sign characters inside triples.
std::string render_relative_char(const WeylType& rel, const IrrLabel& e) {
  if (rel.is_trivial_group()) return "1";
  if (rel.family == WeylFamily::A) {
    const auto* p = e.partition();
    if (p && p->size() == 1) return "1";
    if (p && std::all_of(p->begin(), p->end(), [](int x) { return x == 1; }))
      return "eps";
  }
  return render(e);
}

IrrLabel parse_relative_char(const WeylType& rel, const std::string& s) {
  if (rel.is_trivial_group()) {
    if (s == "1") return IrrLabel::unit();
    return parse_label(s, rel);
  }
  if (rel.family == WeylFamily::A) {
    if (s == "1") return IrrLabel::of(Partition{rel.rank + 1});
    if (s == "eps") return IrrLabel::of(Partition(rel.rank + 1, 1));
  }
  return parse_label(s, rel);
}

const CuspidalDatum* find_datum(const CuspidalLevi& levi,
                                const std::optional<int>& d) {
  for (const auto& datum : levi.d_values)
    if (datum.d == d) return &datum;
  return nullptr;
}

// Split "(...)" body at top-level commas (bracket literals contain commas).
std::vector<std::string> split_triple(const std::string& body) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::string render(const TwistedType& tt, const CSLabel& x) {
  if (x.levi_kind == LeviKind::empty) return render(x.relative_char);
  const auto levi = find_levi(tt, x.levi_kind, x.levi_type);
  if (!levi)
    throw UnknownLevi("levi " + render(x.levi_type) + " not in " + render(tt));
  std::string s = "(" + render(x.levi_type) + "," +
                  render_relative_char(levi->relative_type, x.relative_char);
  if (x.d) s += "," + std::to_string(*x.d);
  s += ")";
  const CuspidalDatum* datum = find_datum(*levi, x.d);
  if (datum && datum->count > 1) s += "#" + std::to_string(x.cuspidal_index);
  return s;
}

CSLabel parse_cs_label(const TwistedType& tt, const std::string& s) {
  if (s.empty()) throw ParseError("empty entry", 0);
  if (s[0] != '(') {
    return CSLabel::plain(parse_label(s, folded_type(tt)));
  }
  const std::size_t close = s.find(')');
  if (close == std::string::npos) throw ParseError("unterminated '('", s.size());
  const auto parts = split_triple(s.substr(1, close - 1));
  if (parts.size() < 2 || parts.size() > 3)
    throw ParseError("expected (levi,char) or (levi,char,d)", 1);

  int index = 1;
  if (close + 1 < s.size()) {
    if (s[close + 1] != '#')
      throw ParseError("trailing characters after ')'", close + 1);
    std::size_t at = close + 2;
    if (at >= s.size()) throw ParseError("expected an index after '#'", at);
    index = 0;
    for (; at < s.size(); ++at) {
      if (s[at] < '0' || s[at] > '9') throw ParseError("bad index digit", at);
      index = index * 10 + (s[at] - '0');
      if (index > 1000000) throw ParseError("index out of range", at);
    }
  }

  WeylType levi_type = parse_weyl_type(parts[0]);
  auto levi = find_levi(tt, LeviKind::proper, levi_type);
  if (!levi) levi = find_levi(tt, LeviKind::full, levi_type);
  if (!levi)
    throw UnknownLevi("no cuspidal levi of type " + parts[0] + " in " +
                      render(tt));

  IrrLabel e = parse_relative_char(levi->relative_type, parts[1]);

  std::optional<int> d;
  if (parts.size() == 3) {
    if (parts[2].empty()) throw ParseError("empty d field", close);
    int v = 0;
    for (char c : parts[2]) {
      if (c < '0' || c > '9') throw ParseError("bad d digit", close);
      v = v * 10 + (c - '0');
    }
    d = v;
  }
  const CuspidalDatum* datum = find_datum(*levi, d);
  if (!datum) {
    if (!d && levi->d_values.size() == 1) {
      datum = &levi->d_values.front();
      d = datum->d;
    } else {
      throw UnknownLabel("no cuspidal object " + s + " in " + render(tt));
    }
  }
  if (index < 1 || index > datum->count)
    throw UnknownLabel("cuspidal index out of range in " + s);
  return {levi->kind, levi->levi_type, std::move(e), d, index};
}

}  // namespace taumap
