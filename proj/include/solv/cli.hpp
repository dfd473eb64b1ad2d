#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "solv/lieformat.hpp"
#include "solv/qiengine.hpp"

namespace solv {

/// Loads every `*.lie` file of a directory as an extended-catalog entry
/// (metadata from `meta` lines). Unreadable or invalid files produce
/// diagnostics and are excluded.
std::vector<ExtendedEntry> load_extended_dir(const std::string& dir,
                                             std::vector<Diagnostic>& diagnostics);

/// Command dispatch. args excludes the program name.
/// Exit codes: 0 success / verdict produced; 1 input diagnostic;
/// 2 unsupported instance; 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solv
