#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "holoiso/poly.hpp"

namespace holoiso::cli {

/// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerificationFailed = 2;

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a+bi", "a-bi", "a", "bi" (no spaces). Throws std::invalid_argument.
Complex parse_complex(const std::string& text);

}  // namespace holoiso::cli
