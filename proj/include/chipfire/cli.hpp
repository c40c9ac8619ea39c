#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chipfire {

/// Command line driver, callable in process. args excludes the program
/// name. Results go to out as single-line JSON (or indented with --pretty);
/// domain failures print an error object to err. Returns 0 on success, 1 on
/// domain errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace chipfire
