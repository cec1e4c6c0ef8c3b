#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kIoError = 2;
inline constexpr int kEmptyAdaptInput = 3;
inline constexpr int kBadFormat = 4;
inline constexpr int kCorruptPayload = 5;
inline constexpr int kVerificationFailed = 6;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qlc::cli
