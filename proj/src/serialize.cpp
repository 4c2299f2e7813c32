#include "taumap/serialize.hpp"

#include <json.hpp>

namespace taumap {

namespace {

using nlohmann::json;

json entry_to_json(const TwistedType& tt, const CSLabel& x) {
  if (x.levi_kind == LeviKind::empty)
    return {{"kind", "plain"}, {"label", render(x.relative_char)}};
  const auto levi = find_levi(tt, x.levi_kind, x.levi_type);
  if (!levi) throw UnknownLevi("levi not in " + render(tt));
  json j{{"kind", "cuspidal"},
         {"levi", render(x.levi_type)},
         {"char", render(x.relative_char)},
         {"index", x.cuspidal_index}};
  if (x.d) j["d"] = *x.d;
  return j;
}

CSLabel entry_from_json(const TwistedType& tt, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "plain")
    return CSLabel::plain(
        parse_label(j.at("label").get<std::string>(), folded_type(tt)));
  if (kind != "cuspidal") throw ParseError("entry kind must be plain|cuspidal", 0);
  const WeylType levi_type = parse_weyl_type(j.at("levi").get<std::string>());
  auto levi = find_levi(tt, LeviKind::proper, levi_type);
  if (!levi) levi = find_levi(tt, LeviKind::full, levi_type);
  if (!levi) throw UnknownLevi("no cuspidal levi " + render(levi_type));
  CSLabel x;
  x.levi_kind = levi->kind;
  x.levi_type = levi->levi_type;
  x.relative_char = parse_label(j.at("char").get<std::string>(), levi->relative_type);
  if (j.contains("d")) x.d = j.at("d").get<int>();
  x.cuspidal_index = j.at("index").get<int>();
  return x;
}

}  // namespace

std::string table_to_json(const GoldenTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json entries = json::array();
    for (const auto& e : row.entries) entries.push_back(entry_to_json(table.tt, e));
    rows.push_back({{"stratum", render(row.stratum)},
                    {"box", render(row.box)},
                    {"entries", entries}});
  }
  json doc{{"group", render(table.tt)}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

GoldenTable table_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad table document: ") + e.what(), 0);
  }
  GoldenTable table{parse_twisted(doc.at("group").get<std::string>()), {}};
  const WeylType folded = folded_type(table.tt);
  for (const auto& jrow : doc.at("rows")) {
    StratumRow row;
    row.stratum = parse_label(jrow.at("stratum").get<std::string>(), folded);
    row.box = parse_component_group(jrow.at("box").get<std::string>());
    for (const auto& jentry : jrow.at("entries"))
      row.entries.push_back(entry_from_json(table.tt, jentry));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string table_to_csv(const GoldenTable& table) {
  std::string out = "group,stratum,box,entry_kind,entry_text\n";
  const std::string group = render(table.tt);
  for (const auto& row : table.rows) {
    for (const auto& e : row.entries) {
      out += csv_field(group) + ',' + csv_field(render(row.stratum)) + ',' +
             csv_field(render(row.box)) + ',' +
             (e.levi_kind == LeviKind::empty ? "plain" : "cuspidal");
      out += ',' + csv_field(render(table.tt, e)) + '\n';
    }
  }
  return out;
}

std::string fiber_law_to_text(const FiberLawReport& report) {
  std::string out;
  for (const auto& row : report.rows) {
    out += (row.pass ? "ok   " : "FAIL ");
    out += render(row.stratum) + ": fiber " + std::to_string(row.fiber_size) +
           ", c* " + std::to_string(row.c_star_size) + "\n";
  }
  out += std::string(report.pass ? "ok  " : "FAIL") + " totals: " +
         std::to_string(report.total_fibers) + " fiber entries, " +
         std::to_string(report.total_c_star) + " c* elements, " +
         std::to_string(report.total_labels) + " labels\n";
  return out;
}

std::string fiber_law_to_json(const FiberLawReport& report,
                              const TwistedType& tt) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json matching = json::array();
    for (const auto& [entry, rep] : row.matching)
      matching.push_back({{"entry", entry}, {"rep", rep}});
    rows.push_back({{"stratum", render(row.stratum)},
                    {"fiber_size", row.fiber_size},
                    {"c_star_size", row.c_star_size},
                    {"pass", row.pass},
                    {"matching", matching}});
  }
  json doc{{"group", render(tt)},
           {"rows", rows},
           {"total_fibers", report.total_fibers},
           {"total_c_star", report.total_c_star},
           {"total_labels", report.total_labels},
           {"pass", report.pass}};
  return doc.dump(2) + "\n";
}

}  // namespace taumap
