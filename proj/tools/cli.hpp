#ifndef EXTROPY_TOOLS_CLI_HPP_
#define EXTROPY_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace extropy::cli {

// Runs one command.  `args` excludes the program name.  Returns 0 on
// success, 1 on domain errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Writes through a temporary file in the same directory and renames it into
// place, so a failed run never leaves a partial file behind.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace extropy::cli

#endif  // EXTROPY_TOOLS_CLI_HPP_
