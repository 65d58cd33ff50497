#pragma once

#include <string>
#include <string_view>

namespace critlab {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double x);

/// Strict locale-independent parse; throws ContractViolation on junk.
double parse_double(std::string_view text);

}  // namespace critlab
