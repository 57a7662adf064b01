#pragma once

#include <iosfwd>

namespace deckclass::cli {

enum ExitCode { kOk = 0, kParseError = 2, kOutOfScope = 3, kVerificationFailed = 4 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deckclass::cli
