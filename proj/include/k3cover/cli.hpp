#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "k3cover/verify.hpp"

namespace k3cover::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInvalidInput = 3 };

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const VerifyOptions& verify = {});

}  // namespace k3cover::cli
