#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace reuleaux::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 1,
  kNonExtremal = 2,
  kStructural = 3,
  kPlan = 4,
};

/// Runs one command line; everything is written to `out` and `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Two-space indented JSON with sorted keys and floats at 17 significant digits.
/// Throws NumericalError on a non-finite number.
std::string dump(const nlohmann::json& j);

}  // namespace reuleaux::cli
