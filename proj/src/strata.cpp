#include "taumap/strata.hpp"

namespace taumap {

namespace {

const StratumRow& row_of(const TwistedType& tt, const IrrLabel& e) {
  for (const auto& row : golden_table(tt).rows)
    if (row.stratum == e) return row;
  throw UnknownStratum(render(e) + " does not head a row of " + render(tt));
}

CStarDescriptor c_star_for(const TwistedType& tt, const IrrLabel& e,
                           const ComponentGroup& box) {
  const IrrLabel unit = IrrLabel::of(NamedLabel{1, 0, 0});
  if (e == unit && tt.family == TwistedFamily::twisted_e6)
    return {CStarDescriptor::Mode::special_unit, {1, 2, 3}, 4};
  if (e == unit && tt.family == TwistedFamily::triple_d4)
    return {CStarDescriptor::Mode::special_unit, {1, 2}, 2};
  return {CStarDescriptor::Mode::ordinary, {}, box.ordinary_size()};
}

}  // namespace

std::vector<IrrLabel> strata(const TwistedType& tt) {
  if (tt.classical())
    throw UnsupportedType(
        "classical strata require external Springer data; only 2E6/3D4 are "
        "tabulated");
  std::vector<IrrLabel> out;
  for (const auto& row : golden_table(tt).rows) out.push_back(row.stratum);
  return out;
}

ComponentGroup component_group(const TwistedType& tt, const IrrLabel& e) {
  return row_of(tt, e).box;
}

CStarDescriptor c_star(const TwistedType& tt, const IrrLabel& e) {
  const auto& row = row_of(tt, e);
  return c_star_for(tt, e, row.box);
}

std::vector<std::string> c_star_names(const CStarDescriptor& desc,
                                      const ComponentGroup& box) {
  std::vector<std::string> names;
  if (desc.mode == CStarDescriptor::Mode::special_unit) {
    for (int m : desc.moduli) {
      int phi = 0;
      for (int j = 1; j <= m; ++j) {
        int a = j, b = m;
        while (b) {
          int t = a % b;
          a = b;
          b = t;
        }
        if (a == 1) ++phi;
      }
      for (int j = 1; j <= phi; ++j)
        names.push_back("C" + std::to_string(m) + "!" + std::to_string(j));
    }
    return names;
  }
  switch (box.kind) {
    case ComponentGroup::Kind::trivial:
      return {"1"};
    case ComponentGroup::Kind::cyclic:
      for (int j = 0; j < box.param; ++j)
        names.push_back("chi" + std::to_string(j));
      return names;
    case ComponentGroup::Kind::sym3:
      return {"1", "sgn", "2"};
    case ComponentGroup::Kind::sym4:
      return {"1", "sgn", "2", "3", "3'"};
    case ComponentGroup::Kind::two_torus: {
      names.push_back("");
      for (int j = 0; j < box.param; ++j) {
        std::vector<std::string> next;
        for (const auto& base : names) {
          next.push_back(base + "+");
          next.push_back(base + "-");
        }
        names = std::move(next);
      }
      if (box.param == 0) names = {"1"};
      return names;
    }
  }
  throw Error("unreachable");
}

FiberLawReport verify_fiber_law(const GoldenTable& table) {
  FiberLawReport report;
  report.total_labels = static_cast<int>(enumerate_cs_prime(table.tt).size());
  for (const auto& row : table.rows) {
    FiberLawRow r;
    r.stratum = row.stratum;
    r.fiber_size = static_cast<int>(row.entries.size());
    const auto desc = c_star_for(table.tt, row.stratum, row.box);
    r.c_star_size = desc.size;
    r.pass = r.fiber_size == r.c_star_size;
    if (r.pass) {
      const auto names = c_star_names(desc, row.box);
      for (std::size_t i = 0; i < row.entries.size(); ++i)
        r.matching.emplace_back(render(table.tt, row.entries[i]),
                                i < names.size() ? names[i] : "?");
    }
    report.total_fibers += r.fiber_size;
    report.total_c_star += r.c_star_size;
    report.rows.push_back(std::move(r));
  }
  report.pass = report.total_fibers == report.total_labels &&
                report.total_c_star == report.total_labels;
  for (const auto& r : report.rows) report.pass = report.pass && r.pass;
  return report;
}

FiberLawReport verify_fiber_law(const TwistedType& tt) {
  return verify_fiber_law(golden_table(tt));
}

}  // namespace taumap
