#include "taumap/verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "taumap/centralizer.hpp"
#include "taumap/serialize.hpp"

namespace taumap {

namespace {

// Independent partition counter (bounded-part recurrence), used to check the
// classical enumerations against the 2-core/2-quotient count identity.
long long partition_count(int n) {
  std::vector<long long> ways(n + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) ways[i] += ways[i - k];
  return ways[n];
}

long long bipartition_count(int n) {
  long long total = 0;
  for (int j = 0; j <= n; ++j)
    total += partition_count(j) * partition_count(n - j);
  return total;
}

struct Suite {
  VerifyReport report;
  std::optional<std::string> scope;

  void add(const std::string& name, const std::string& where, bool pass,
           std::string detail) {
    if (scope && *scope != where && where != "global") return;
    report.checks.push_back({name, where, pass, std::move(detail)});
  }
};

std::string plural(int n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

void check_table(Suite& s, const TwistedType& tt, const GoldenTable& table) {
  const std::string where = render(tt);
  const bool is_e6 = tt.family == TwistedFamily::twisted_e6;

  const auto checksum = table_checksum(table);
  s.add("table-checksum", where, checksum == frozen_checksum(tt),
        "fnv64 " + std::to_string(checksum));

  const std::string text = render_text(table);
  s.add("table-transcription", where, text == stored_transcription(tt),
        "text rendering vs stored transcription");

  int entries = 0;
  for (const auto& row : table.rows) entries += static_cast<int>(row.entries.size());
  const int want_rows = is_e6 ? 17 : 5;
  const int want_entries = is_e6 ? 30 : 8;
  s.add("table-shape", where,
        static_cast<int>(table.rows.size()) == want_rows &&
            entries == want_entries,
        plural(static_cast<int>(table.rows.size()), "row") + ", " +
            plural(entries, "entry"));

  const auto law = verify_fiber_law(table);
  std::string law_detail = std::to_string(law.total_fibers) + " = " +
                           std::to_string(law.total_c_star) + " = " +
                           std::to_string(law.total_labels);
  for (const auto& row : law.rows)
    if (!row.pass)
      law_detail += "; " + render(row.stratum) + " has fiber " +
                    std::to_string(row.fiber_size) + " but c* " +
                    std::to_string(row.c_star_size);
  s.add("fiber-law", where, law.pass, law_detail);

  // Retraction: each row starts with its own stratum, and each stratum
  // appears as a plain entry only there.
  bool retraction = true;
  std::string retraction_detail = "row heads lead their own rows";
  for (const auto& row : table.rows) {
    const CSLabel head = CSLabel::plain(row.stratum);
    if (row.entries.empty() || !(row.entries.front() == head)) {
      retraction = false;
      retraction_detail = render(row.stratum) + " does not lead its row";
      break;
    }
    int hits = 0;
    for (const auto& other : table.rows)
      hits += static_cast<int>(
          std::count(other.entries.begin(), other.entries.end(), head));
    if (hits != 1) {
      retraction = false;
      retraction_detail =
          render(row.stratum) + " appears in " + plural(hits, "row");
      break;
    }
  }
  s.add("retraction", where, retraction, retraction_detail);

  // Plain entries across all rows enumerate Irr of the folded type once each.
  const auto expected = irr_labels(folded_type(tt));
  std::vector<IrrLabel> plain;
  for (const auto& row : table.rows)
    for (const auto& e : row.entries)
      if (e.levi_kind == LeviKind::empty) plain.push_back(e.relative_char);
  bool complete = plain.size() == expected.size();
  std::string complete_detail = plural(static_cast<int>(plain.size()), "plain entry");
  if (complete) {
    for (const auto& label : expected) {
      if (std::count(plain.begin(), plain.end(), label) != 1) {
        complete = false;
        complete_detail = render(label) + " does not appear exactly once";
        break;
      }
    }
  }
  s.add("plain-completeness", where, complete, complete_detail);

  // Case-(ii) labels lie in the unit row; stored case flags are as expected.
  const IrrLabel unit = IrrLabel::of(NamedLabel{1, 0, 0});
  bool unit_rule = true;
  std::string unit_detail = "case-(ii) entries land on the unit stratum";
  const StratumRow* unit_row = nullptr;
  for (const auto& row : table.rows)
    if (row.stratum == unit) unit_row = &row;
  for (const auto& x : enumerate_cs_prime(tt)) {
    if (x.levi_kind != LeviKind::full || !x.d) continue;
    if (unipotent_support_case(tt, *x.d) != UnipotentCase::ii) continue;
    const bool found =
        unit_row && std::count(unit_row->entries.begin(),
                               unit_row->entries.end(), x) == 1;
    if (!found) {
      unit_rule = false;
      unit_detail = render(tt, x) + " is not in the unit row";
    }
  }
  const int d_case_ii = 0;
  const int d_case_i = is_e6 ? 4 : 1;
  if (unipotent_support_case(tt, d_case_ii) != UnipotentCase::ii ||
      unipotent_support_case(tt, d_case_i) != UnipotentCase::i) {
    unit_rule = false;
    unit_detail = "stored case flags disagree with the d=0 dichotomy";
  }
  s.add("unit-rule", where, unit_rule, unit_detail);

  const auto single = cuspidal_stratum_check(table);
  std::string single_detail = "each cuspidal entry sits in one row";
  for (const auto& item : single.items)
    if (!item.pass) single_detail = item.name + ": " + item.detail;
  s.add("cuspidal-stratum", where, single.all_pass(), single_detail);
}

void check_classical_counts(Suite& s) {
  bool pass_a = true;
  std::string detail_a;
  for (int n = 2; n <= 12; ++n) {
    const auto tt = TwistedType::twisted_a(n);
    const long long got = static_cast<long long>(enumerate_cs_prime(tt).size());
    const long long want = partition_count(n + 1);
    if (!detail_a.empty()) detail_a += " ";
    detail_a += "n=" + std::to_string(n) + ":" + std::to_string(got);
    if (got != want) {
      pass_a = false;
      detail_a += "!=" + std::to_string(want);
    }
  }
  s.add("classical-count-2A", "2A:n=2..12", pass_a, detail_a);

  bool pass_d = true;
  std::string detail_d;
  for (int n = 4; n <= 10; ++n) {
    const auto tt = TwistedType::twisted_d(n);
    long long want = bipartition_count(n - 1);
    for (int k = 3; k * k <= n; k += 2) want += bipartition_count(n - k * k);
    const long long got = static_cast<long long>(enumerate_cs_prime(tt).size());
    if (!detail_d.empty()) detail_d += " ";
    detail_d += "n=" + std::to_string(n) + ":" + std::to_string(got);
    if (got != want) {
      pass_d = false;
      detail_d += "!=" + std::to_string(want);
    }
  }
  s.add("classical-count-2D", "2D:n=4..10", pass_d, detail_d);

  bool size_law = true;
  std::string size_detail = "enumeration matches the stored (d,count) data";
  std::vector<TwistedType> sample = {
      TwistedType::twisted_a(2), TwistedType::twisted_a(5),
      TwistedType::twisted_a(8), TwistedType::twisted_d(4),
      TwistedType::twisted_d(9), TwistedType::twisted_e6(),
      TwistedType::triple_d4()};
  for (const auto& tt : sample) {
    std::size_t want = 0;
    for (const auto& levi : cuspidal_levis(tt))
      for (const auto& datum : levi.d_values)
        want += static_cast<std::size_t>(datum.count) *
                irr_labels(levi.relative_type).size();
    if (enumerate_cs_prime(tt).size() != want) {
      size_law = false;
      size_detail = render(tt) + " enumeration size is off";
    }
  }
  s.add("cs-prime-size-law", "global", size_law, size_detail);
}

void check_centralizers(Suite& s) {
  bool pass = true;
  std::string detail = "a, b integral for all valid k <= 40";
  const auto a_group = TwistedType::twisted_a(2);
  for (int k = 2; k <= 40 && pass; ++k) {
    const auto report = centralizer_rank_check(a_group, k);
    if (!report.pass) {
      pass = false;
      detail = "2A k=" + std::to_string(k) + ": " + report.detail;
    }
  }
  for (int k = 3; k <= 40 && pass; k += 2) {
    const auto report =
        centralizer_rank_check(TwistedType::twisted_d(k * k), k);
    if (!report.pass) {
      pass = false;
      detail = "2D k=" + std::to_string(k) + ": " + report.detail;
    }
  }
  s.add("centralizer-integrality", "global", pass, detail);

  bool locality = true;
  std::string locality_detail = "FULL only in the bad-characteristic cases";
  const std::vector<RClass> classes = {RClass::char2, RClass::char3,
                                       RClass::generic};
  for (int k = 2; k <= 40; ++k)
    for (RClass r : classes) {
      const bool full = centralizer_type(a_group, k, r).full_group;
      if (full != (r == RClass::char2)) locality = false;
    }
  for (int k = 3; k <= 40; k += 2)
    for (RClass r : classes) {
      const bool full =
          centralizer_type(TwistedType::twisted_d(k * k), k, r).full_group;
      if (full != (r == RClass::char2)) locality = false;
    }
  for (RClass r : classes) {
    const auto e6 = TwistedType::twisted_e6();
    const auto d4 = TwistedType::triple_d4();
    if (centralizer_type(e6, 4, r).full_group != (r == RClass::char2))
      locality = false;
    if (centralizer_type(e6, 0, r).full_group) locality = false;
    if (centralizer_type(d4, 1, r).full_group != (r == RClass::char3))
      locality = false;
    if (centralizer_type(d4, 0, r).full_group) locality = false;
  }
  if (!locality) locality_detail = "unexpected FULL placement";
  s.add("centralizer-full-locality", "global", locality, locality_detail);
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
  Suite s;
  s.scope = options.scope;

  const auto e6 = TwistedType::twisted_e6();
  const auto d4 = TwistedType::triple_d4();
  check_table(s, e6, options.table_2e6 ? *options.table_2e6 : golden_table(e6));
  check_table(s, d4, options.table_3d4 ? *options.table_3d4 : golden_table(d4));
  check_classical_counts(s);
  check_centralizers(s);

  for (const auto* plugin : options.plugins) {
    if (!plugin) continue;
    bool pass = true;
    std::string detail = "total, codomain-correct, fixes empty-levi characters";
    try {
      validate_plugin(plugin->group(), *plugin);
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    s.add("plugin-law", render(plugin->group()), pass, detail);
  }

  return s.report;
}

std::string report_to_text(const VerifyReport& report) {
  std::string out;
  int passed = 0;
  for (const auto& c : report.checks) {
    out += (c.pass ? "PASS " : "FAIL ");
    out += c.name + " [" + c.scope + "] " + c.detail + "\n";
    if (c.pass) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(report.checks.size()) +
         " checks passed\n";
  return out;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name},
                      {"scope", c.scope},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  nlohmann::json doc{{"checks", checks}, {"pass", report.all_pass()}};
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const VerifyReport& report) {
  std::string out = "name,scope,pass,detail\n";
  for (const auto& c : report.checks)
    out += csv_field(c.name) + ',' + csv_field(c.scope) + ',' +
           (c.pass ? "true" : "false") + ',' + csv_field(c.detail) + '\n';
  return out;
}

}  // namespace taumap
