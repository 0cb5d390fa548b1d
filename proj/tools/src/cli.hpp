#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mrig::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInvalidModel = 3,
  kNotInCone = 4,
  kVerificationFailed = 5,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrig::cli
