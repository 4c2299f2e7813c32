#pragma once

// Emitters for the three output formats. The data format is one JSON
// document per table:
//   {group, rows: [{stratum, box, entries: [{kind: plain|cuspidal,
//    label | (levi, char, d, index)}]}]}
// and round-trips: parsing the emitted document reproduces the in-memory
// table exactly. CSV rows are (group, stratum, box, entry_kind, entry_text),
// quoted per RFC 4180 where needed.

#include <string>

#include "taumap/golden.hpp"
#include "taumap/strata.hpp"

namespace taumap {

std::string table_to_json(const GoldenTable& table);
GoldenTable table_from_json(const std::string& text);
std::string table_to_csv(const GoldenTable& table);

std::string csv_field(const std::string& raw);

std::string fiber_law_to_text(const FiberLawReport& report);
std::string fiber_law_to_json(const FiberLawReport& report,
                              const TwistedType& tt);

}  // namespace taumap
