#include "burnside/certificate_functions.hpp"

#include "burnside/expoly_parser.hpp"

#include <stdexcept>

namespace burnside {

const std::vector<NamedExpPoly>& certificate_functions() {
  static const std::vector<NamedExpPoly> table = {
      {"f1",
       "(t+2)*E^(4t) - 2*t*(2*t+1)*E^(3t) - 2*(t+2)*E^(2t) + 2*t*E^(t) + t + 2"},
      {"f2",
       "(t^2+4t+6)E^(6t) - 4t(2t^2+2t+1)E^(5t) - 3(t^2+4t+6)E^(4t)"
       " - 8t(t^2-t-1)E^(3t) + 3(t^2+4t+6)E^(2t) - 4t E^(t) - t^2 - 4t - 6"},
      {"f3",
       "(t^3+6t^2+18t+24)E^(8t) - 4t(4t^3+6t^2+6t+3)E^(7t)"
       " - 4(t^3+6t^2+18t+24)E^(6t) - 4t(16t^3-12t-9)E^(5t)"
       " + 6(t^3+6t^2+18t+24)E^(4t) - 4t(4t^3-6t^2+6t+9)E^(3t)"
       " - 4(t^3+6t^2+18t+24)E^(2t) + 12t E^(t) + t^3 + 6t^2 + 18t + 24"},
      {"h1", "E^(4t) - t(t+1)E^(3t) - 2E^(2t) - t(t-1)E^(t) + 1"},
      {"h2", "E^(4t)(t-2) + 2E^(3t)t - 2E^(2t)(t-2) + 2E^(t)t(2t-1) + t - 2"},
      {"h3",
       "E^(6t)(t^2-4t+6) - 4E^(5t)t - 3E^(4t)(t^2-4t+6) - 8E^(3t)(t^2+t-1)t"
       " + 3E^(2t)(t^2-4t+6) - 4E^(t)(2t^2-2t+1)t - t^2 + 4t - 6"},
      {"h4",
       "E^(8t)(t^3-6t^2+18t-24) + 12E^(7t)t - 4E^(6t)(t^3-6t^2+18t-24)"
       " + 4E^(5t)(4t^3+6t^2+6t-9)t + 6E^(4t)(t^3-6t^2+18t-24)"
       " + 4E^(3t)(16t^3-12t+9)t - 4E^(2t)(t^3-6t^2+18t-24)"
       " + 4E^(t)(4t^3-6t^2+6t-3)t + t^3 - 6t^2 + 18t - 24"},
  };
  return table;
}

ExpPoly certificate_function(std::string_view name) {
  for (const auto& f : certificate_functions())
    if (f.name == name) return parse_expoly(f.text);
  throw std::out_of_range("unknown certificate function '" + std::string(name) + "'");
}

}  // namespace burnside
