#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lieconv::cli {

/// Process exit codes. No other values are ever returned.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  // a mathematical violation (or internal inconsistency) was found
  kExitUsage = 2,
  kExitResource = 3,
};

using GetEnv = std::function<const char*(const char*)>;

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const GetEnv& getenv_fn);

/// Same, reading the real environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieconv::cli
