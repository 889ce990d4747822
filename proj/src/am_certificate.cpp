#include "burnside/am_certificate.hpp"

#include "burnside/expoly_parser.hpp"

#include <stdexcept>

namespace burnside {

namespace {

struct Stripped {
  ExpPoly reached;
  unsigned exp_degree = 0;
  Rational constant = 1;
};

Stripped strip_factor(const ExpPoly& derivative) {
  Stripped s{derivative, 0, 1};
  if (derivative.is_zero()) return s;
  const unsigned k = derivative.min_exp_degree();
  if (k == 0) return s;
  s.exp_degree = k;
  s.constant = derivative.content();
  s.reached = derivative.shifted_down(k) * (Rational(1) / s.constant);
  return s;
}

}  // namespace

std::vector<Rational> AMCertificate::limits() const {
  std::vector<Rational> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.limit);
  return out;
}

AMResult certify_absolutely_monotonic(const ExpPoly& f, unsigned max_depth) {
  AMCertificate cert;
  cert.root = f;
  cert.root_limit = f.value_at_zero();

  ExpPoly current = f;
  Rational current_limit = cert.root_limit;
  for (unsigned depth = 0;; ++depth) {
    if (current.all_coefficients_nonnegative()) {
      cert.terminal = current;
      return cert;
    }
    if (current_limit < 0) {
      return AMFailure{AMFailure::Reason::negative_limit, current, current_limit, depth,
                       "limit at 0+ equals " + current_limit.str()};
    }
    if (depth == max_depth) {
      return AMFailure{AMFailure::Reason::depth_exhausted, current, current_limit, depth,
                       "no certificate within depth " + std::to_string(max_depth)};
    }
    const ExpPoly derivative = differentiate(current);
    Stripped s = strip_factor(derivative);
    AMStep step{s.reached, 1, s.exp_degree, s.constant, derivative.value_at_zero()};
    current = s.reached;
    // The reached ExpPoly differs from the derivative by a positive factor,
    // so its sign at 0+ follows the recorded limit.
    current_limit = step.limit;
    cert.steps.push_back(std::move(step));
  }
}

bool replay(const AMCertificate& cert) {
  if (cert.root_limit != cert.root.value_at_zero() || cert.root_limit < 0) return false;
  if (!cert.terminal.all_coefficients_nonnegative()) return false;
  ExpPoly current = cert.root;
  for (const auto& step : cert.steps) {
    if (step.limit < 0 || step.stripped_constant <= 0) return false;
    ExpPoly derivative = current;
    for (unsigned i = 0; i < step.derivatives; ++i) derivative = differentiate(derivative);
    if (derivative.value_at_zero() != step.limit) return false;
    const ExpPoly rebuilt =
        ExpPoly::exponential(step.stripped_exp) * step.reached * step.stripped_constant;
    if (!(rebuilt == derivative)) return false;
    current = step.reached;
  }
  return current == cert.terminal;
}

nlohmann::ordered_json to_json(const AMCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["root"] = render(cert.root);
  doc["root_limit"] = cert.root_limit.str();
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : cert.steps) {
    nlohmann::ordered_json j;
    j["reached"] = render(s.reached);
    j["derivatives"] = s.derivatives;
    j["stripped_exp"] = s.stripped_exp;
    j["stripped_constant"] = s.stripped_constant.str();
    j["limit"] = s.limit.str();
    steps.push_back(std::move(j));
  }
  doc["steps"] = std::move(steps);
  doc["terminal"] = render(cert.terminal);
  return doc;
}

nlohmann::ordered_json to_json(const AMFailure& failure) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["failure"] = to_string(failure.reason);
  doc["offending"] = render(failure.offending);
  doc["limit"] = failure.limit.str();
  doc["depth"] = failure.depth;
  doc["message"] = failure.message;
  return doc;
}

AMCertificate certificate_from_json(const nlohmann::ordered_json& doc) {
  AMCertificate cert;
  cert.root = parse_expoly(doc.at("root").get<std::string>());
  cert.root_limit = parse_rational(doc.at("root_limit").get<std::string>());
  for (const auto& j : doc.at("steps")) {
    AMStep s;
    s.reached = parse_expoly(j.at("reached").get<std::string>());
    s.derivatives = j.at("derivatives").get<unsigned>();
    s.stripped_exp = j.at("stripped_exp").get<unsigned>();
    s.stripped_constant = parse_rational(j.at("stripped_constant").get<std::string>());
    s.limit = parse_rational(j.at("limit").get<std::string>());
    cert.steps.push_back(std::move(s));
  }
  cert.terminal = parse_expoly(doc.at("terminal").get<std::string>());
  return cert;
}

const char* to_string(AMFailure::Reason reason) {
  switch (reason) {
    case AMFailure::Reason::negative_limit:
      return "negative_limit";
    case AMFailure::Reason::depth_exhausted:
      return "depth_exhausted";
  }
  return "unknown";
}

}  // namespace burnside
