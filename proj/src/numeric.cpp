#include "burnside/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>
#include <stdexcept>

namespace burnside {

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' ||
      den.front() == '+')
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

const Real& pi_real() {
  static const Real value = boost::math::constants::pi<Real>();
  return value;
}

}  // namespace burnside
