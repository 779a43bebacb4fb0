#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bombieri/polynomial.hpp"

namespace bombieri::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFail = 1,
  kUsage = 2,
  kUncertain = 3,
};

/// Runs one subcommand. args excludes the program name. Results go to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a", "bi", "a+bi", "a-bi" (also with 'j'); throws ConfigError.
poly::Complex parse_complex(std::string_view text);

/// Comma-separated coefficients c_1..c_d of p (c_0 = 0). With normalized,
/// the list starts at c_2 and c_1 = 1 is implied.
poly::ComplexPolynomial parse_polynomial(std::string_view list, bool normalized);

}  // namespace bombieri::cli
