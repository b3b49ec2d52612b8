#ifndef CAPELLI_CLI_HPP
#define CAPELLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace capelli {

/// Runs one CLI invocation (args exclude the program name).  Writes the
/// command's output to `out` and returns the process exit code.  Every
/// error path prints machine-readable JSON {"error": CODE, "detail": ...}
/// and returns nonzero.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace capelli

#endif
