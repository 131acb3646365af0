#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace migmeta::cli {

/// Process exit status. 1 is reserved for domain findings (violations,
/// validation errors, rejected tailoring); tool faults never use it.
enum class ExitStatus : int {
  Success = 0,
  Findings = 1,
  InputError = 2,
  InternalError = 3,
};

/// Runs the `migmeta` command line. `args` excludes the program name.
[[nodiscard]] ExitStatus run(const std::vector<std::string>& args, std::ostream& out,
                             std::ostream& err);

}  // namespace migmeta::cli
