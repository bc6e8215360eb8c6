#pragma once

#include <iosfwd>

namespace hs2::cli {

/// Exit codes of the `hs2` executable.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfigError = 2,
  kBeyondBlowup = 3,
  kRuntimeError = 4,
  kFiniteBlowup = 10,
};

/// Entry point shared by tools/main.cpp and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hs2::cli
