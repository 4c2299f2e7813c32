#pragma once

// Evaluation of the map from character-sheaf labels to strata. For 2E6/3D4
// the embedded tables are the definition; empty-levi labels retract to their
// own character when that character heads a row. For the classical types the
// symbol combinatorics is not reproduced here: non-empty-levi labels are
// delegated to an externally supplied plugin that must be total on the pair
// set and fix every empty-levi character.

#include <functional>
#include <vector>

#include "taumap/golden.hpp"

namespace taumap {

class ClassicalTauPlugin {
 public:
  using Fn = std::function<IrrLabel(const CuspidalLevi&, const IrrLabel&)>;

  // Validates the map over all of CS''(tt): defined everywhere, values in
  // Irr of the folded type, and fixes the empty-levi characters. Throws
  // InvalidParam on any violation.
  static ClassicalTauPlugin make(const TwistedType& tt, Fn fn);

  // No validation; used to exercise the contract checks themselves.
  static ClassicalTauPlugin make_unchecked(const TwistedType& tt, Fn fn);

  const TwistedType& group() const { return tt_; }
  IrrLabel map(const CuspidalLevi& levi, const IrrLabel& e) const {
    return fn_(levi, e);
  }

 private:
  ClassicalTauPlugin(TwistedType tt, Fn fn)
      : tt_(tt), fn_(std::move(fn)) {}

  TwistedType tt_;
  Fn fn_;
};

// Runs the plugin contract checks; throws InvalidParam with a description of
// the first violation.
void validate_plugin(const TwistedType& tt, const ClassicalTauPlugin& plugin);

// The stratum label of x. Throws UnknownLabel if x is not a valid label of
// tt, MissingPlugin for a classical non-empty-levi label without a plugin.
IrrLabel tau(const TwistedType& tt, const CSLabel& x,
             const ClassicalTauPlugin* plugin = nullptr);

// The fibre over a stratum label: table row entries for exceptional types,
// a preimage computed through the plugin for classical ones.
std::vector<CSLabel> fiber(const TwistedType& tt, const IrrLabel& e,
                           const ClassicalTauPlugin* plugin = nullptr);

// Result of a report-valued consistency check.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};

// Every cuspidal (non-plain) entry must appear in exactly one row: the
// alternative definition of the map on cuspidal objects is single-valued.
CheckList cuspidal_stratum_check(const GoldenTable& table);
CheckList cuspidal_stratum_check(const TwistedType& tt);

}  // namespace taumap
