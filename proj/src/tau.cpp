#include "taumap/tau.hpp"

#include <algorithm>

namespace taumap {

ClassicalTauPlugin ClassicalTauPlugin::make(const TwistedType& tt, Fn fn) {
  ClassicalTauPlugin plugin(tt, std::move(fn));
  validate_plugin(tt, plugin);
  return plugin;
}

ClassicalTauPlugin ClassicalTauPlugin::make_unchecked(const TwistedType& tt,
                                                      Fn fn) {
  return ClassicalTauPlugin(tt, std::move(fn));
}

void validate_plugin(const TwistedType& tt, const ClassicalTauPlugin& plugin) {
  if (!tt.classical())
    throw InvalidParam("plugins apply to classical types only");
  if (!(plugin.group() == tt))
    throw InvalidParam("plugin was built for " + render(plugin.group()) +
                       ", not " + render(tt));
  const auto codomain = irr_labels(folded_type(tt));
  for (const auto& pair : enumerate_cs2(tt)) {
    IrrLabel image;
    try {
      image = plugin.map(pair.levi, pair.relative_char);
    } catch (const std::exception& e) {
      throw InvalidParam(std::string("plugin is not total: ") + e.what());
    }
    if (std::find(codomain.begin(), codomain.end(), image) == codomain.end())
      throw InvalidParam("plugin value " + render(image) +
                         " is not a character of the folded type");
    if (pair.levi.kind == LeviKind::empty && !(image == pair.relative_char))
      throw InvalidParam("plugin moves the empty-levi character " +
                         render(pair.relative_char));
  }
}

namespace {

const StratumRow* row_containing(const GoldenTable& table, const CSLabel& x) {
  for (const auto& row : table.rows)
    for (const auto& entry : row.entries)
      if (entry == x) return &row;
  return nullptr;
}

}  // namespace

IrrLabel tau(const TwistedType& tt, const CSLabel& x,
             const ClassicalTauPlugin* plugin) {
  const auto universe = enumerate_cs_prime(tt);
  if (std::find(universe.begin(), universe.end(), x) == universe.end())
    throw UnknownLabel("not a character-sheaf label of " + render(tt));
  if (tt.exceptional()) {
    const auto* row = row_containing(golden_table(tt), x);
    if (!row) throw Error("table is missing an enumerated label");
    return row->stratum;
  }
  if (x.levi_kind == LeviKind::empty) return x.relative_char;
  if (!plugin)
    throw MissingPlugin("classical values on non-empty levis live in the "
                        "symbol combinatorics; supply a plugin");
  if (!(plugin->group() == tt))
    throw InvalidParam("plugin was built for " + render(plugin->group()) +
                       ", not " + render(tt));
  const auto levi = find_levi(tt, x.levi_kind, x.levi_type);
  return plugin->map(*levi, x.relative_char);
}

std::vector<CSLabel> fiber(const TwistedType& tt, const IrrLabel& e,
                           const ClassicalTauPlugin* plugin) {
  if (tt.exceptional()) {
    for (const auto& row : golden_table(tt).rows)
      if (row.stratum == e) return row.entries;
    throw UnknownStratum(render(e) + " does not head a row of " + render(tt));
  }
  if (!plugin)
    throw UnsupportedType(
        "classical strata require external data; supply a plugin");
  std::vector<CSLabel> out;
  for (const auto& x : enumerate_cs_prime(tt))
    if (tau(tt, x, plugin) == e) out.push_back(x);
  if (out.empty())
    throw UnknownStratum(render(e) + " is not in the image of the plugin map");
  return out;
}

CheckList cuspidal_stratum_check(const GoldenTable& table) {
  CheckList report;
  for (const auto& x : enumerate_cs_prime(table.tt)) {
    if (x.levi_kind == LeviKind::empty) continue;
    int hits = 0;
    for (const auto& row : table.rows)
      hits += static_cast<int>(
          std::count(row.entries.begin(), row.entries.end(), x));
    const std::string text = render(table.tt, x);
    report.items.push_back(
        {"cuspidal-entry " + text, hits == 1,
         hits == 1 ? "appears in exactly one row"
                   : "appears in " + std::to_string(hits) + " rows"});
  }
  return report;
}

CheckList cuspidal_stratum_check(const TwistedType& tt) {
  return cuspidal_stratum_check(golden_table(tt));
}

}  // namespace taumap
