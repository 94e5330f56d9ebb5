#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonia::cli {

/// In-process CLI entry point: `args` holds the arguments after the program
/// name. Reports go to `out` (or the path given by --output); diagnostics
/// go to `err`. Returns the process exit code:
///
///   0  every requested verdict holds
///   1  a verdict failed (reports carry the witness / gap)
///   2  usage or domain errors
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace harmonia::cli
