#pragma once

// The exponential polynomials whose absolute monotonicity carries the
// complete monotonicity of the Burnside-remainder family, keyed f1..f3, h1..h4.

#include "burnside/expoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace burnside {

struct NamedExpPoly {
  std::string name;
  std::string text;
};

/// f1, f2, f3, h1, h2, h3, h4 in that order.
const std::vector<NamedExpPoly>& certificate_functions();

/// Parsed function by label; throws std::out_of_range for unknown labels.
ExpPoly certificate_function(std::string_view name);

}  // namespace burnside
