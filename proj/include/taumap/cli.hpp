#pragma once

// Command-line front end. Verbs: enumerate, table, tau, fiber, strata,
// centralizer, verify; every verb takes a group spec ("2A:5", "2D:9",
// "2E6", "3D4") and `--format {text,data,csv}`. Exit status 0 on success,
// 1 on data errors, 2 on usage errors; `verify` exits 0 only if every
// check passes.

#include <iosfwd>
#include <string>
#include <vector>

namespace taumap {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace taumap
