#pragma once

#include "burnside/expoly.hpp"

#include "json.hpp"

#include <string>
#include <variant>
#include <vector>

namespace burnside {

/// One differentiation of the chain. `derivative` = stripped_constant *
/// e^{stripped_exp t} * `reached`; `limit` is derivative(0+).
struct AMStep {
  ExpPoly reached;
  unsigned derivatives = 1;
  unsigned stripped_exp = 0;
  Rational stripped_constant = 1;
  Rational limit;
};

/// Replayable evidence that `root` is absolutely monotonic on (0, inf):
/// root(0) >= 0, every recorded limit >= 0, and `terminal` has only
/// nonnegative coefficients.
struct AMCertificate {
  ExpPoly root;
  Rational root_limit;
  std::vector<AMStep> steps;
  ExpPoly terminal;

  /// Step limits in chain order (root_limit excluded).
  std::vector<Rational> limits() const;
  std::size_t depth() const { return steps.size(); }
};

struct AMFailure {
  enum class Reason { negative_limit, depth_exhausted };
  Reason reason;
  ExpPoly offending;
  Rational limit;
  unsigned depth = 0;
  std::string message;
};

using AMResult = std::variant<AMCertificate, AMFailure>;

inline constexpr unsigned kDefaultCertificateDepth = 64;

/// Greedy chain search: stop when every coefficient is nonnegative; else
/// require f(0+) >= 0, differentiate, and strip the largest common e^{kt}
/// together with the positive content. A failure never means f is not AM.
AMResult certify_absolutely_monotonic(const ExpPoly& f,
                                      unsigned max_depth = kDefaultCertificateDepth);

/// Re-derives every step from `root`; true iff all recorded objects match
/// exactly and the sign conditions hold.
bool replay(const AMCertificate& cert);

/// Canonical document; keys in fixed order (schema_version, root, steps,
/// terminal) so certificates diff cleanly.
nlohmann::ordered_json to_json(const AMCertificate& cert);
nlohmann::ordered_json to_json(const AMFailure& failure);
AMCertificate certificate_from_json(const nlohmann::ordered_json& doc);

const char* to_string(AMFailure::Reason reason);

}  // namespace burnside
