#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace critlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Suite tags accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite. Throws LookupError for an unknown tag.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed);

nlohmann::json to_json(std::string_view suite, const std::vector<CheckResult>& results);

}  // namespace critlab
