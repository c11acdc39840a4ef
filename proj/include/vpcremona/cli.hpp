#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vpcremona::cli {

struct Config {
    int step_cap = 64;
    int sample_count = 10;
    std::uint64_t seed = 0;
};

enum ExitCode : int { Ok = 0, Malformed = 1, VerificationFailed = 2, Usage = 64 };

std::string usage();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace vpcremona::cli
