#pragma once

// The aggregated verification suite behind `verify`: table checksums and
// transcription equality, the fibre law, retraction and plain-entry
// completeness, the unit rule, single-valuedness on cuspidal entries,
// classical enumeration counts against an independent partition counter,
// and centralizer integrality. Table overrides exist so that fault-injection
// tests can corrupt a copy and watch the right check fail.

#include <optional>
#include <string>
#include <vector>

#include "taumap/strata.hpp"

namespace taumap {

struct Check {
  std::string name;
  std::string scope;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int exit_status() const { return all_pass() ? 0 : 1; }
};

struct VerifyOptions {
  const GoldenTable* table_2e6 = nullptr;  // override, e.g. a corrupted copy
  const GoldenTable* table_3d4 = nullptr;
  std::vector<const ClassicalTauPlugin*> plugins;
  std::optional<std::string> scope;  // restrict to checks of one group
};

VerifyReport verify_all(const VerifyOptions& options = {});

std::string report_to_text(const VerifyReport& report);
std::string report_to_json(const VerifyReport& report);
std::string report_to_csv(const VerifyReport& report);

}  // namespace taumap
