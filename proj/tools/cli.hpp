#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidpack/io.hpp"

namespace rigidpack::cli {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Exit codes: 0 verdict true or success, 1 false or deficient, 2 usage, parse or
/// hypothesis error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Recheck {
  bool ok = true;
  std::vector<std::string> notes;
};

/// Re-verifies the certificates of a report and checks that they support its verdict.
Recheck verify_report(const Json& report);

}  // namespace rigidpack::cli
