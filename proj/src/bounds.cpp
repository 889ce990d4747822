#include "burnside/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

const char* const kCatalog = R"json([
  {
    "name": "trigamma-envelope",
    "target": "stirling_ratio",
    "lower": "exp(psi1(x + 1/2)/12)",
    "upper": "exp(psi1(x)/12)",
    "domain": {"lo": 0, "lo_open": true},
    "strict": {"lower": true, "upper": true},
    "description": "trigamma replacing the Binet remainder, shifts 1/2 and 0"
  },
  {
    "name": "shifted-root",
    "target": "burnside_ratio",
    "lower": "exp(-1/(24*x))",
    "upper": "exp(-1/(24*(sqrt(x^2 + 3*x + 5/2) - 1/2)))",
    "domain": {"lo": 0, "lo_open": true},
    "strict": {"lower": true, "upper": false},
    "description": "ln Gamma(x) bracket with a square-root denominator, Burnside form"
  },
  {
    "name": "h-constants",
    "target": "H",
    "lower": "sqrt(2*pi/e)",
    "upper": "sqrt(2)*exp(1/12)",
    "domain": {"lo": 0, "lo_open": true},
    "strict": {"lower": true, "upper": false},
    "description": "sharp constants of the decreasing function H"
  },
  {
    "name": "trigamma-integer",
    "target": "trigamma_ratio",
    "lower": "exp(1/(240*x^3) - 11/(6720*x^5))",
    "upper": "exp(1/(240*x^3))",
    "domain": {"lo": 1, "lo_open": false},
    "strict": {"lower": true, "upper": true},
    "integers_only": true,
    "description": "two terms of the trigamma-corrected expansion at integers"
  },
  {
    "name": "half-shift",
    "target": "gamma",
    "upper": "sqrt(2*pi)*((x + 1/2)/e)^(x + 1/2)*(1 - k/(24*x) + (k^2/1152 + k/48)/x^2)^(1/k)",
    "domain": {"lo": 0, "lo_open": true},
    "strict": {"lower": true, "upper": true},
    "parameters": {"k": 1},
    "parameter_ranges": {"k": {"min": 1, "max": 1000, "integer": true}},
    "description": "k-th root correction of the Burnside approximation, for x beyond a k-dependent constant"
  },
  {
    "name": "stirling-k",
    "target": "gamma",
    "upper": "sqrt(2*pi*x)*(x/e)^x*(1 + k/(12*x) + k^2/(288*x^2))^(1/k)",
    "domain": {"lo": 0, "lo_open": true},
    "strict": {"lower": true, "upper": true},
    "parameters": {"k": 1},
    "parameter_ranges": {"k": {"min": 1, "max": 5, "integer": true}},
    "description": "k-th root correction of Stirling's approximation, for x beyond a k-dependent constant"
  },
  {
    "name": "stirling-k-reversed",
    "target": "gamma",
    "lower": "sqrt(2*pi*x)*(x/e)^x*(1 + k/(12*x) + k^2/(288*x^2))^(1/k)",
    "domain": {"lo": 0, "lo_open": true},
    "strict": {"lower": true, "upper": true},
    "parameters": {"k": 6},
    "parameter_ranges": {"k": {"min": 6, "max": 1000, "integer": true}},
    "description": "the same correction reversed for k >= 6"
  },
  {
    "name": "remainder-envelope",
    "target": "burnside_ratio",
    "lower": "exp(-1/(12*(2*x + 1)))",
    "upper": "exp(-(2*x + 3)/(48*(x + 1)^2))",
    "domain": {"lo": -0.5, "lo_open": true},
    "strict": {"lower": true, "upper": true},
    "description": "limits of exp((2x+1)b(x)) and exp(-(x+1)^2 b(x) - x/24), both decreasing"
  }
])json";

Real json_real(const nlohmann::ordered_json& j) {
  if (j.is_string()) return Real(j.get<std::string>());
  if (j.is_number()) return Real(j.get<double>());
  throw std::invalid_argument("expected a number");
}

std::string real_text(const Real& x) { return to_string(x, 40); }

Real budget_for(const Real& target, unsigned digits) {
  return pow(Real(10), -static_cast<int>(digits)) * std::max(abs(target), Real(1));
}

Real interior_point(const BoundSpec& s) {
  const Interval& d = s.domain;
  if (d.lo_infinite) return d.hi_infinite ? Real(1) : d.hi - 1;
  if (d.hi_infinite) return d.lo + 1;
  return (d.lo + d.hi) / 2;
}

void require_domain(const BoundSpec& s, const Real& x) {
  if (!s.domain.contains(x))
    throw std::domain_error(s.name + ": x = " + to_string(x) + " outside " + s.domain.str());
}

Real side_value(const BoundSpec& s, BoundSide side, const Real& x, const EvalPrecision& prec) {
  const auto& e = s.side(side);
  if (!e) throw std::invalid_argument(s.name + " has no " + to_string(side) + " side");
  return e->eval(x, s.parameters, prec);
}

}  // namespace

const char* to_string(BoundTarget target) {
  switch (target) {
    case BoundTarget::stirling_ratio: return "stirling_ratio";
    case BoundTarget::burnside_ratio: return "burnside_ratio";
    case BoundTarget::H: return "H";
    case BoundTarget::gamma: return "gamma";
    case BoundTarget::trigamma_ratio: return "trigamma_ratio";
  }
  return "?";
}

BoundTarget bound_target_from_string(const std::string& name) {
  for (auto t : {BoundTarget::stirling_ratio, BoundTarget::burnside_ratio, BoundTarget::H,
                 BoundTarget::gamma, BoundTarget::trigamma_ratio})
    if (name == to_string(t)) return t;
  throw std::invalid_argument("unknown bound target '" + name + "'");
}

const char* to_string(BoundSide side) { return side == BoundSide::lower ? "lower" : "upper"; }

Real log_target_factor(BoundTarget target, const Real& x, const EvalPrecision& prec) {
  const Real half = Real(1) / 2;
  const bool needs_positive =
      target == BoundTarget::stirling_ratio || target == BoundTarget::trigamma_ratio;
  if (needs_positive ? x <= 0 : x <= -half)
    throw std::domain_error(std::string(to_string(target)) + " undefined at x = " + to_string(x));
  switch (target) {
    case BoundTarget::burnside_ratio:
      return 0;
    case BoundTarget::gamma:
      return log_sqrt_two_pi() + (x + half) * (log(x + half) - 1);
    case BoundTarget::H:
      return log_sqrt_two_pi() - half + 1 / (24 * (x + half));
    case BoundTarget::stirling_ratio:
      return (x + half) * log1p(1 / (2 * x)) - half;
    case BoundTarget::trigamma_ratio:
      return (x + half) * log1p(1 / (2 * x)) - half - trigamma(x + half, prec) / 12;
  }
  throw std::logic_error("bad target");
}

Real target_value(BoundTarget target, const Real& x, const EvalPrecision& prec) {
  const Real f = log_target_factor(target, x, prec);
  return exp(remainder(Remainder::b, x, prec) + f);
}

void BoundSpec::validate(const EvalPrecision& prec) const {
  if (!lower && !upper) throw std::invalid_argument(name + ": no side given");
  if (!domain.lo_infinite && !domain.hi_infinite &&
      (domain.lo > domain.hi || (domain.lo == domain.hi && (domain.lo_open || domain.hi_open))))
    throw std::invalid_argument(name + ": empty domain");
  for (const auto& [key, range] : parameter_ranges) {
    auto it = parameters.find(key);
    if (it == parameters.end()) throw std::invalid_argument(name + ": missing parameter " + key);
    const Real& v = it->second;
    if (v < range.min || v > range.max || (range.integer && v != floor(v)))
      throw std::invalid_argument(name + ": parameter " + key + " = " + to_string(v) +
                                  " out of range");
  }
  if (lower && upper) {
    const Real x = interior_point(*this);
    if (side_value(*this, BoundSide::lower, x, prec) > side_value(*this, BoundSide::upper, x, prec))
      throw std::invalid_argument(name + ": lower side exceeds upper side at x = " + to_string(x));
  }
}

BoundEvaluation evaluate_bound(const BoundSpec& spec, const Real& x, const EvalPrecision& prec) {
  require_domain(spec, x);
  BoundEvaluation e;
  e.x = x;
  e.target = target_value(spec.target, x, prec);
  if (spec.lower) {
    e.lower = side_value(spec, BoundSide::lower, x, prec);
    e.lower_margin = e.target - *e.lower;
  }
  if (spec.upper) {
    e.upper = side_value(spec, BoundSide::upper, x, prec);
    e.upper_margin = *e.upper - e.target;
  }
  return e;
}

Real normalized_side(const BoundSpec& spec, BoundSide side, const Real& x,
                     const EvalPrecision& prec) {
  require_domain(spec, x);
  return side_value(spec, side, x, prec) / exp(log_target_factor(spec.target, x, prec));
}

std::vector<Violation> verify_bound_on_grid(const BoundSpec& spec, const std::vector<Real>& xs,
                                            const BoundVerifyOptions& options) {
  std::vector<Violation> out;
  for (const Real& x : xs) {
    const BoundEvaluation e = evaluate_bound(spec, x, options.precision);
    const Real budget = budget_for(e.target, options.digits);
    for (BoundSide side : {BoundSide::lower, BoundSide::upper}) {
      const auto& margin = side == BoundSide::lower ? e.lower_margin : e.upper_margin;
      if (!margin) continue;
      const bool fails = *margin < -budget;
      const bool unresolved = !fails && spec.strict(side) && *margin <= budget;
      if (fails || unresolved)
        out.push_back({x, side, side == BoundSide::lower ? *e.lower : *e.upper, e.target, *margin,
                       fails});
    }
  }
  return out;
}

std::optional<Real> empirical_threshold(const BoundSpec& spec, BoundSide side,
                                        const std::vector<Real>& xs,
                                        const BoundVerifyOptions& options) {
  std::optional<Real> from;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    const BoundEvaluation e = evaluate_bound(spec, *it, options.precision);
    const auto& margin = side == BoundSide::lower ? e.lower_margin : e.upper_margin;
    if (!margin) throw std::invalid_argument(spec.name + " has no " + to_string(side) + " side");
    if (*margin < -budget_for(e.target, options.digits)) break;
    from = *it;
  }
  return from;
}

// ------------------------------------------------------------------ catalog

const nlohmann::ordered_json& bound_catalog_json() {
  static const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(kCatalog);
  return doc;
}

std::vector<BoundSpec> load_bound_catalog(const nlohmann::ordered_json& manifest) {
  if (!manifest.is_array()) throw std::invalid_argument("bound manifest must be an array");
  std::vector<BoundSpec> out;
  for (const auto& j : manifest) {
    try {
      BoundSpec s;
      s.name = j.at("name").get<std::string>();
      s.target = bound_target_from_string(j.at("target").get<std::string>());
      if (j.contains("lower")) s.lower = Expression::parse(j["lower"].get<std::string>());
      if (j.contains("upper")) s.upper = Expression::parse(j["upper"].get<std::string>());
      const auto& d = j.at("domain");
      s.domain.lo_infinite = !d.contains("lo");
      if (!s.domain.lo_infinite) s.domain.lo = json_real(d["lo"]);
      s.domain.lo_open = s.domain.lo_infinite || d.value("lo_open", true);
      s.domain.hi_infinite = !d.contains("hi");
      if (!s.domain.hi_infinite) s.domain.hi = json_real(d["hi"]);
      s.domain.hi_open = s.domain.hi_infinite || d.value("hi_open", true);
      if (j.contains("strict")) {
        s.lower_strict = j["strict"].value("lower", true);
        s.upper_strict = j["strict"].value("upper", true);
      }
      s.integers_only = j.value("integers_only", false);
      s.description = j.value("description", "");
      if (j.contains("parameters"))
        for (const auto& [k, v] : j["parameters"].items()) s.parameters[k] = json_real(v);
      if (j.contains("parameter_ranges"))
        for (const auto& [k, v] : j["parameter_ranges"].items())
          s.parameter_ranges[k] = {json_real(v.at("min")), json_real(v.at("max")),
                                   v.value("integer", false)};
      s.validate();
      out.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad bound manifest entry: ") + e.what());
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string("bad bound expression: ") + e.what());
    }
  }
  return out;
}

nlohmann::ordered_json to_json(const BoundSpec& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["target"] = to_string(s.target);
  if (s.lower) j["lower"] = s.lower->text();
  if (s.upper) j["upper"] = s.upper->text();
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  if (!s.domain.lo_infinite) {
    d["lo"] = real_text(s.domain.lo);
    d["lo_open"] = s.domain.lo_open;
  }
  if (!s.domain.hi_infinite) {
    d["hi"] = real_text(s.domain.hi);
    d["hi_open"] = s.domain.hi_open;
  }
  j["domain"] = d;
  j["strict"] = {{"lower", s.lower_strict}, {"upper", s.upper_strict}};
  j["integers_only"] = s.integers_only;
  j["description"] = s.description;
  if (!s.parameters.empty()) {
    auto& p = j["parameters"];
    for (const auto& [k, v] : s.parameters) p[k] = real_text(v);
  }
  if (!s.parameter_ranges.empty()) {
    auto& p = j["parameter_ranges"];
    for (const auto& [k, r] : s.parameter_ranges)
      p[k] = {{"min", real_text(r.min)}, {"max", real_text(r.max)}, {"integer", r.integer}};
  }
  return j;
}

namespace {

const std::vector<BoundSpec>& catalog() {
  static const std::vector<BoundSpec> specs = load_bound_catalog(bound_catalog_json());
  return specs;
}

}  // namespace

BoundSpec bound_spec(const std::string& name, const std::map<std::string, Real>& overrides) {
  for (const auto& s : catalog())
    if (s.name == name) {
      BoundSpec out = s;
      for (const auto& [k, v] : overrides) {
        if (!out.parameters.count(k))
          throw std::invalid_argument(name + " has no parameter '" + k + "'");
        out.parameters[k] = v;
      }
      if (!overrides.empty()) out.validate();
      return out;
    }
  throw std::out_of_range("unknown bound '" + name + "'");
}

std::vector<std::string> bound_names() {
  std::vector<std::string> out;
  for (const auto& s : catalog()) out.push_back(s.name);
  return out;
}

// ------------------------------------------------------------------ grids

std::vector<Real> linear_points(const Real& lo, const Real& hi, unsigned n) {
  if (n == 0 || !(hi > lo)) throw std::invalid_argument("linear_points needs lo < hi, n > 0");
  std::vector<Real> out;
  out.reserve(n);
  for (unsigned i = 1; i <= n; ++i) out.push_back(lo + (hi - lo) * i / n);
  return out;
}

std::vector<Real> log_points(const Real& lo, const Real& hi, unsigned n) {
  if (n < 2 || !(lo > 0) || !(hi > lo))
    throw std::invalid_argument("log_points needs 0 < lo < hi, n >= 2");
  std::vector<Real> out;
  out.reserve(n);
  const Real a = log(lo), span = log(hi) - log(lo);
  for (unsigned i = 0; i < n; ++i) out.push_back(exp(a + span * i / (n - 1)));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<Real> integer_points(long first, long last) {
  std::vector<Real> out;
  for (long i = first; i <= last; ++i) out.push_back(Real(i));
  return out;
}

std::vector<Real> default_grid(const BoundSpec& spec) {
  if (spec.integers_only) return integer_points(1, 20);
  const Real lo = spec.domain.lo_infinite ? Real(0) : spec.domain.lo;
  return linear_points(lo, lo + 50, 200);
}

// ------------------------------------------------------------------ compare

ComparisonResult compare_bounds(const BoundSpec& a, const BoundSpec& b, BoundSide side,
                                const Real& lo, const Real& hi, const CompareOptions& options) {
  if (!a.side(side) || !b.side(side))
    throw std::invalid_argument(std::string("incompatible specs: both need a ") +
                                to_string(side) + " side");
  if (!(hi > lo)) throw std::invalid_argument("compare range needs lo < hi");
  for (const BoundSpec* s : {&a, &b})
    if (!s->domain.contains(lo) || !s->domain.contains(hi))
      throw std::invalid_argument("compare range leaves the domain of " + s->name);
  if (options.scan_points < 2) throw std::invalid_argument("scan needs at least 2 points");

  const auto& prec = options.precision;
  auto gap = [&](const Real& x) {
    return normalized_side(a, side, x, prec) - normalized_side(b, side, x, prec);
  };
  auto sign = [](const Real& g) { return g > 0 ? 1 : (g < 0 ? -1 : 0); };
  // a is tighter where it is the smaller upper (larger lower) side
  auto winner_for = [&](int s) -> std::string {
    if (s == 0) return "tie";
    const bool a_wins = side == BoundSide::upper ? s < 0 : s > 0;
    return a_wins ? a.name : b.name;
  };

  const bool log_scan = lo > 0;
  std::vector<Real> xs;
  if (log_scan) {
    xs = log_points(lo, hi, options.scan_points);
  } else {
    xs = linear_points(lo, hi, options.scan_points - 1);
    xs.insert(xs.begin(), lo);
  }
  std::vector<Real> gaps;
  gaps.reserve(xs.size());
  for (const Real& x : xs) gaps.push_back(gap(x));

  ComparisonResult r{a.name, b.name, side, {}, {}, {}, 0};
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (sign(gaps[i]) == 0) continue;
    if (last && sign(gaps[*last]) != sign(gaps[i])) {
      Real l = xs[*last], h = xs[i], gl = gaps[*last], gh = gaps[i];
      while (h - l > options.bracket_width) {
        const Real m = (l + h) / 2;
        const Real gm = gap(m);
        if (sign(gm) == 0) {
          l = h = m;
          gl = gh = gm;
          break;
        }
        if (sign(gm) == sign(gl)) {
          l = m;
          gl = gm;
        } else {
          h = m;
          gh = gm;
        }
      }
      r.crossovers.push_back({l, h, gl, gh});
    }
    last = i;
  }

  std::vector<Real> cuts{lo};
  for (const auto& c : r.crossovers) cuts.push_back((c.lo + c.hi) / 2);
  cuts.push_back(hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    int s = 0;
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (xs[k] > cuts[i] && xs[k] < cuts[i + 1] && sign(gaps[k]) != 0) {
        s = sign(gaps[k]);
        break;
      }
    if (s == 0) {
      const Real m = log_scan ? sqrt(cuts[i] * cuts[i + 1]) : (cuts[i] + cuts[i + 1]) / 2;
      s = sign(gap(m));
    }
    r.winners.push_back({cuts[i], cuts[i + 1], winner_for(s)});
  }
  r.asymptotic_winner = winner_for(sign(gaps.back()));
  r.right_ratio = normalized_side(a, side, hi, prec) / normalized_side(b, side, hi, prec);
  return r;
}

nlohmann::ordered_json to_json(const ComparisonResult& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["spec_a"] = r.spec_a;
  j["spec_b"] = r.spec_b;
  j["side"] = to_string(r.side);
  auto& cs = j["crossovers"] = nlohmann::ordered_json::array();
  for (const auto& c : r.crossovers)
    cs.push_back({{"lo", to_string(c.lo, 17)}, {"hi", to_string(c.hi, 17)}});
  auto& ws = j["winners"] = nlohmann::ordered_json::array();
  for (const auto& w : r.winners)
    ws.push_back({{"from", to_string(w.from, 17)}, {"to", to_string(w.to, 17)}, {"winner", w.winner}});
  j["asymptotic_winner"] = r.asymptotic_winner;
  j["right_ratio"] = to_string(r.right_ratio, 17);
  return j;
}

// ------------------------------------------------------------------ asymptotics

const std::vector<Rational>& asymptotic_coefficients() {
  static const std::vector<Rational> c = {make_rational(1, 240), make_rational(-11, 6720),
                                          make_rational(107, 80640),
                                          make_rational(-2911, 1520640)};
  return c;
}

Real asymptotic_exponent(const Real& x, unsigned terms, const EvalPrecision& prec) {
  if (terms > asymptotic_coefficients().size())
    throw std::invalid_argument("at most 4 correction terms");
  if (!(x > 0)) throw std::domain_error("asymptotic series needs x > 0");
  Real sum = trigamma(x + Real(1) / 2, prec) / 12;
  const Real x2 = x * x;
  Real xp = x2 * x;
  for (unsigned j = 0; j < terms; ++j) {
    sum += to_real(asymptotic_coefficients()[j]) / xp;
    xp *= x2;
  }
  return sum;
}

Real log_gamma1_asymptotic(const Real& x, unsigned terms, const EvalPrecision& prec) {
  return log_sqrt_two_pi() + (x + Real(1) / 2) * log(x) - x + asymptotic_exponent(x, terms, prec);
}

Real log_factorial_shifted(const Real& n, const Real& a, const EvalPrecision& prec) {
  if (!(n > 0) || !(n + a > 0)) throw std::domain_error("needs n > 0 and n + a > 0");
  return n * log(n) - n + log(2 * pi_real() * n) / 2 + trigamma(n + a, prec) / 12;
}

Real best_shift(unsigned n, const std::vector<Real>& shifts, const EvalPrecision& prec) {
  if (shifts.empty()) throw std::invalid_argument("no shifts given");
  const Real nn(n);
  const Real exact = log_gamma(nn + 1, prec);
  Real best = shifts.front();
  Real best_err = abs(exact - log_factorial_shifted(nn, best, prec));
  for (const Real& a : shifts) {
    const Real err = abs(exact - log_factorial_shifted(nn, a, prec));
    if (err < best_err) {
      best = a;
      best_err = err;
    }
  }
  return best;
}

std::string bound_csv_header() { return "spec,x,lower,target,upper,margin"; }

std::string bound_csv_row(const BoundSpec& spec, const BoundEvaluation& e) {
  std::ostringstream out;
  out << spec.name << ',' << to_string(e.x, 17) << ',';
  if (e.lower) out << to_string(*e.lower, 17);
  out << ',' << to_string(e.target, 17) << ',';
  if (e.upper) out << to_string(*e.upper, 17);
  out << ',';
  std::optional<Real> m;
  for (const auto& s : {e.lower_margin, e.upper_margin})
    if (s && (!m || *s < *m)) m = *s;
  if (m) out << to_string(*m, 17);
  return out.str();
}

}  // namespace burnside
