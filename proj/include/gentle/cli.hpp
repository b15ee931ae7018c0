#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gentle {

/// Entry point of the `gentle` command line tool, callable in process so
/// tests can drive it without spawning. `args` holds the arguments after the
/// program name. Exit codes: 0 success, 1 usage, 2 unreadable or invalid
/// input, 3 proven not equivalent, 4 equivalence indeterminate, 5 internal
/// invariant breach.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gentle
