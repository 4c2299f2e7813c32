#pragma once

// The canonical tables for 2E6 and 3D4. Each row is one fibre of the map:
// the stratum label E, its boxed component group c(E), and the fibre entries
// in table order (the first entry is E itself). These constants are the
// definition of the map for the exceptional types; verify_all guards them
// with a checksum and an independently stored text transcription.

#include <cstdint>
#include <string>
#include <vector>

#include "taumap/component_group.hpp"
#include "taumap/cuspidal.hpp"

namespace taumap {

struct StratumRow {
  IrrLabel stratum;
  ComponentGroup box;
  std::vector<CSLabel> entries;

  friend bool operator==(const StratumRow&, const StratumRow&) = default;
};

struct GoldenTable {
  TwistedType tt;
  std::vector<StratumRow> rows;

  friend bool operator==(const GoldenTable&, const GoldenTable&) = default;
};

// The embedded table for 2E6 (17 rows, 30 entries) or 3D4 (5 rows,
// 8 entries); UnsupportedType for classical types.
const GoldenTable& golden_table(const TwistedType& tt);

// Normalized text layout, one row per line: `entries ..... [box]` with
// entries comma-separated, ASCII primes, `eps`, and `#i` multiplicity
// expansion. Ends with a newline.
std::string render_text(const GoldenTable& table);

// Transcription the text rendering must reproduce byte-for-byte.
const std::string& stored_transcription(const TwistedType& tt);

// FNV-1a 64 of render_text; frozen_checksum is the pinned constant.
std::uint64_t table_checksum(const GoldenTable& table);
std::uint64_t frozen_checksum(const TwistedType& tt);

}  // namespace taumap
