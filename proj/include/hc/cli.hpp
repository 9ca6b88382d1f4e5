#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hc {

/// Command-line front end. `args` is the argument list without the program
/// name; normal output goes to `out`, diagnostics to `err`. Returns the
/// process exit code:
///   0 success
///   1 coloring failed verification
///   2 input error (bad flags, unparsable files, invalid parameters)
///   3 no qualified order (a greedy fallback coloring is still written)
///   4 search budget exhausted
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hc
