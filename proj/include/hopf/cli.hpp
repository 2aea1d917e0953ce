#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;       // selftest failure
inline constexpr int kBadInput = 2;      // parse or validation failure
inline constexpr int kDisagreement = 3;  // the two pi1 routes disagree
inline constexpr int kNotHopf = 4;       // gcd(g,h) != 1 on reduce
inline constexpr int kInvalid = 5;       // certificate rejected

/// Runs `hopfctl` with `args` (program name excluded). Machine output goes to
/// `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
