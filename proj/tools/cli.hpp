#ifndef WRT_CLI_HPP
#define WRT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wrt {

// Runs the wrtwist command line; returns the process exit code
// (0 success, 2 validation/usage error).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wrt

#endif
