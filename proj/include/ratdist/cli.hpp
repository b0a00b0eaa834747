#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratdist/identity.hpp"
#include "ratdist/rational.hpp"

namespace ratdist::cli {

enum class OutputFormat { Json, Csv, Plain };

/// Exit codes are stable: tooling depends on them.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kDomain = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "n", "-n", "n/d" or "-n/d" with decimal digits and no whitespace.
Rational parse_rational(std::string_view text);
/// Optional minus followed by decimal digits.
BigInt parse_integer(std::string_view text);
/// Three comma-separated rationals.
Triple parse_triple(std::string_view text);

/// Runs one invocation. args excludes the program name. Data goes to out,
/// diagnostics to err (unless --output redirects data to a file).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratdist::cli
