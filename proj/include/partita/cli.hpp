#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partita {

/// Runs the partita command line: subcommands catalog, group, subgroups,
/// partition, construct, verify, bench. Returns the process exit status:
/// 0 on success, 1 on verification failure or runtime error, 2 on usage
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace partita
