#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace augecc::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

// Runs one `augecc` command. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace augecc::cli
