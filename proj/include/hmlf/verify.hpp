#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hmlf::verify {

// Closed-form identities checked against reference values or the quadrature
// oracle. Each check carries its own default tolerance; a caller tolerance
// replaces all of them.

struct CheckResult {
  std::string suite;
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double error = 0.0;  // relative, or absolute when the reference is 0-scale
  double tolerance = 0.0;
  bool passed = false;
  std::string note;  // error message when the check threw
};

/// "series", "calculus", "integrals", "special", "all".
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidArgument) for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, std::optional<double> tolerance = {});

}  // namespace hmlf::verify
