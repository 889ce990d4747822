#include "burnside/monotonicity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burnside {

// ---------------------------------------------------------------- grids

Grid Grid::for_domain(const Interval& domain, const Real& step, unsigned count,
                      const Real& margin) {
  if (domain.lo_infinite) throw std::invalid_argument("Grid: domain has no left end");
  return Grid{domain.lo + margin, step, count, margin};
}

void Grid::validate(const Interval& domain, unsigned max_order) const {
  if (!(step > 0)) throw std::invalid_argument("Grid: step must be > 0");
  if (count == 0) throw std::invalid_argument("Grid: count must be > 0");
  if (open_left_margin < 0) throw std::invalid_argument("Grid: negative margin");
  if (!domain.lo_infinite && start < domain.lo + open_left_margin)
    throw std::invalid_argument("Grid: start " + to_string(start, 8) +
                                " violates the left margin of " + domain.str());
  if (!domain.contains(start) || !domain.contains(last_point(max_order)))
    throw std::invalid_argument("Grid: stencil leaves " + domain.str());
}

// ---------------------------------------------------------------- differences

namespace {

std::vector<std::vector<BigInt>> binomial_rows(unsigned n) {
  std::vector<std::vector<BigInt>> rows{{1}};
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<BigInt> r(k + 1, 1);
    for (unsigned j = 1; j < k; ++j) r[j] = rows[k - 1][j - 1] + rows[k - 1][j];
    rows.push_back(std::move(r));
  }
  return rows;
}

void check_order(unsigned n) {
  if (n > kMaxOrder) throw std::invalid_argument("order must be <= 10");
}

Real epsilon(const MonotonicityOptions& options) {
  if (options.digits < 25 || options.digits > kRealDigits)
    throw std::invalid_argument("MonotonicityOptions: digits must be in [25, 50]");
  return pow(Real(10), -static_cast<int>(options.digits));
}

std::vector<Real> sample(const RealFunction& f, const Grid& grid, unsigned n) {
  std::vector<Real> values;
  values.reserve(grid.count + n);
  for (unsigned i = 0; i < grid.count + n; ++i) values.push_back(f(grid.point(i)));
  return values;
}

CMReport evaluate(const std::string& name, EvidenceKind kind, int sign,
                  const std::vector<Real>& values, const Grid& grid, unsigned first_order,
                  unsigned max_order, const MonotonicityOptions& options) {
  const DifferenceTable table = finite_difference_table(values, grid.count, max_order);
  CMReport report{name, kind, sign, grid, max_order, {}};
  for (unsigned n = first_order; n <= max_order; ++n) {
    OrderVerdict v;
    v.order = n;
    const int alt = (n % 2 ? -1 : 1) * sign;
    bool first = true;
    for (unsigned i = 0; i < grid.count; ++i) {
      const Real value = alt * table.rows[n][i];
      const Real tol = difference_tolerance(n, table.stencil_max[i], options);
      // smallest margin above -tol decides
      if (first || value + tol < v.minimum + v.tolerance) {
        v.minimum = value;
        v.argmin = grid.point(i);
        v.tolerance = tol;
        first = false;
      }
    }
    v.pass = v.minimum >= -v.tolerance;
    v.counterexample_candidate = v.minimum < -options.counterexample_factor * v.tolerance;
    report.orders.push_back(v);
  }
  return report;
}

}  // namespace

DifferenceTable finite_difference_table(const std::vector<Real>& samples, unsigned count,
                                        unsigned n) {
  check_order(n);
  if (samples.size() < count + n)
    throw std::invalid_argument("finite_difference_table: not enough samples");
  const auto binom = binomial_rows(n);
  DifferenceTable t;
  t.rows.assign(n + 1, std::vector<Real>(count));
  t.stencil_max.assign(count, Real(0));
  for (unsigned i = 0; i < count; ++i) {
    for (unsigned j = 0; j <= n; ++j)
      t.stencil_max[i] = std::max(t.stencil_max[i], abs(samples[i + j]));
    for (unsigned k = 0; k <= n; ++k) {
      Real acc = 0;
      for (unsigned j = 0; j <= k; ++j) {
        const Real term = Real(binom[k][j]) * samples[i + j];
        if ((k - j) % 2) acc -= term; else acc += term;
      }
      t.rows[k][i] = acc;
    }
  }
  return t;
}

DifferenceTable finite_difference_table(const RealFunction& f, const Grid& grid, unsigned n) {
  check_order(n);
  return finite_difference_table(sample(f, grid, n), grid.count, n);
}

Real difference_tolerance(unsigned order, const Real& stencil_max,
                          const MonotonicityOptions& options) {
  return Real(options.safety) * pow(Real(2), static_cast<int>(order)) * epsilon(options) *
         stencil_max;
}

bool CMReport::pass() const {
  return std::all_of(orders.begin(), orders.end(), [](const auto& o) { return o.pass; });
}

bool CMReport::counterexample_candidate() const {
  return std::any_of(orders.begin(), orders.end(),
                     [](const auto& o) { return o.counterexample_candidate; });
}

int CMReport::first_failure() const {
  for (const auto& o : orders)
    if (!o.pass) return static_cast<int>(o.order);
  return -1;
}

CMReport check_cm(const std::string& name, const RealFunction& f, const Grid& grid,
                  unsigned max_order, int sign, const MonotonicityOptions& options) {
  check_order(max_order);
  if (sign != 1 && sign != -1) throw std::invalid_argument("check_cm: sign must be +1 or -1");
  return evaluate(name, EvidenceKind::cm, sign, sample(f, grid, max_order), grid, 0, max_order,
                  options);
}

CMReport check_lcm_log(const std::string& name, const RealFunction& log_f, const Grid& grid,
                       unsigned max_order, const MonotonicityOptions& options) {
  check_order(max_order);
  return evaluate(name, EvidenceKind::lcm, 1, sample(log_f, grid, max_order), grid,
                  max_order == 0 ? 0 : 1, max_order, options);
}

CMReport check_lcm(const std::string& name, const RealFunction& f, const Grid& grid,
                   unsigned max_order, const MonotonicityOptions& options) {
  auto log_f = [&](const Real& x) {
    const Real v = f(x);
    if (!(v > 0))
      throw std::domain_error(name + ": nonpositive value at x = " + to_string(x, 10));
    return log(v);
  };
  return check_lcm_log(name, log_f, grid, max_order, options);
}

nlohmann::ordered_json to_json(const CMReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["function"] = r.function;
  j["kind"] = r.kind == EvidenceKind::cm ? "cm" : "lcm";
  j["sign"] = r.sign;
  j["grid"] = {{"start", to_string(r.grid.start)},
               {"step", to_string(r.grid.step)},
               {"count", r.grid.count},
               {"open_left_margin", to_string(r.grid.open_left_margin)}};
  j["max_order"] = r.max_order;
  j["orders"] = nlohmann::ordered_json::array();
  for (const auto& o : r.orders) {
    nlohmann::ordered_json e;
    e["order"] = o.order;
    e["min"] = to_string(o.minimum, 12);
    e["argmin"] = to_string(o.argmin, 10);
    e["tolerance"] = to_string(o.tolerance, 4);
    e["pass"] = o.pass;
    e["counterexample_candidate"] = o.counterexample_candidate;
    j["orders"].push_back(e);
  }
  j["pass"] = r.pass();
  j["counterexample_candidate"] = r.counterexample_candidate();
  return j;
}

std::string to_csv(const CMReport& r) {
  std::ostringstream os;
  os << "order,min,argmin,tolerance,pass\n";
  for (const auto& o : r.orders)
    os << o.order << ',' << to_string(o.minimum, 12) << ',' << to_string(o.argmin, 10) << ','
       << to_string(o.tolerance, 4) << ',' << (o.pass ? "pass" : "fail") << '\n';
  return os.str();
}

// ---------------------------------------------------------------- claims

namespace {

Real b_of(const Real& x) { return remainder(Remainder::b, x); }

std::vector<MonotonicityClaim> build_theorem1() {
  const Interval half = Interval::open_right_unbounded(Real(-0.5));
  const Interval pos = Interval::open_right_unbounded(0);
  const auto cm = EvidenceKind::cm;
  return {
      {"theorem1-item1", "-b(x) is CM on (-1/2, inf)", cm, half,
       [](const Real& x) { return -b_of(x); }},
      {"theorem1-item2", "x b(x) + 1/24 is CM on (0, inf)", cm, pos,
       [](const Real& x) { return x * b_of(x) + Real(1) / 24; }},
      {"theorem1-item3", "1/6 - x/3 - 8x^2 b(x) is CM on (0, inf)", cm, pos,
       [](const Real& x) { return Real(1) / 6 - x / 3 - 8 * x * x * b_of(x); }},
      {"theorem1-item4", "16x^3 b(x) + 2x^2/3 - x/3 + 23/180 is CM on (0, inf)", cm, pos,
       [](const Real& x) {
         return 16 * x * x * x * b_of(x) + 2 * x * x / 3 - x / 3 + Real(23) / 180;
       }},
      {"theorem1-item5", "(2x+1) b(x) + 1/12 is CM on (-1/2, inf)", cm, half,
       [](const Real& x) { return (2 * x + 1) * b_of(x) + Real(1) / 12; }},
      {"theorem1-item6", "-(x+1) b(x) - 1/24 is CM on (-1/2, inf)", cm, half,
       [](const Real& x) { return -(x + 1) * b_of(x) - Real(1) / 24; }},
      {"theorem1-item7", "-(x+1)^2 b(x) - x/24 - 1/16 is CM on (-1/2, inf)", cm, half,
       [](const Real& x) { return -(x + 1) * (x + 1) * b_of(x) - x / 24 - Real(1) / 16; }},
      {"theorem1-item8", "-(x+1)^3 b(x) - x^2/24 - 5x/48 - 203/2880 is CM on (-1/2, inf)", cm,
       half,
       [](const Real& x) {
         const Real y = x + 1;
         return -y * y * y * b_of(x) - x * x / 24 - 5 * x / 48 - Real(203) / 2880;
       }},
  };
}

std::vector<MonotonicityClaim> build_theorem2() {
  const Interval half = Interval::open_right_unbounded(Real(-0.5));
  const Interval pos = Interval::open_right_unbounded(0);
  const auto lcm = EvidenceKind::lcm;
  // each function is exp of the expression below
  return {
      {"theorem2-item1", "exp(x b(x)) is LCM on (0, inf)", lcm, pos,
       [](const Real& x) { return x * b_of(x); }},
      {"theorem2-item2", "exp(-8x^2 b(x) - x/3) is LCM on (0, inf)", lcm, pos,
       [](const Real& x) { return -8 * x * x * b_of(x) - x / 3; }},
      {"theorem2-item3", "exp(16x^3 b(x) + x(2x-1)/3) is LCM on (0, inf)", lcm, pos,
       [](const Real& x) { return 16 * x * x * x * b_of(x) + x * (2 * x - 1) / 3; }},
      {"theorem2-item4", "exp(-b(x)) is LCM on (-1/2, inf)", lcm, half,
       [](const Real& x) { return -b_of(x); }},
      {"theorem2-item5", "exp((2x+1) b(x)) is LCM on (-1/2, inf)", lcm, half,
       [](const Real& x) { return (2 * x + 1) * b_of(x); }},
      {"theorem2-item6", "exp(-(x+1) b(x)) is LCM on (-1/2, inf)", lcm, half,
       [](const Real& x) { return -(x + 1) * b_of(x); }},
      {"theorem2-item7", "exp(-(x+1)^2 b(x) - x/24) is LCM on (-1/2, inf)", lcm, half,
       [](const Real& x) { return -(x + 1) * (x + 1) * b_of(x) - x / 24; }},
      {"theorem2-item8", "exp(-(x+1)^3 b(x) - x(2x+5)/48) is LCM on (-1/2, inf)", lcm, half,
       [](const Real& x) {
         const Real y = x + 1;
         return -y * y * y * b_of(x) - x * (2 * x + 5) / 48;
       }},
  };
}

}  // namespace

const std::vector<MonotonicityClaim>& theorem1_claims() {
  static const auto claims = build_theorem1();
  return claims;
}

const std::vector<MonotonicityClaim>& theorem2_claims() {
  static const auto claims = build_theorem2();
  return claims;
}

const MonotonicityClaim& claim(const std::string& key) {
  for (const auto* list : {&theorem1_claims(), &theorem2_claims()})
    for (const auto& c : *list)
      if (c.key == key) return c;
  throw std::out_of_range("unknown claim: " + key);
}

CMReport check_claim(const MonotonicityClaim& c, const Real& step, unsigned max_order,
                     const MonotonicityOptions& options) {
  const Grid grid = Grid::for_domain(c.domain, step, 64);
  grid.validate(c.domain, max_order);
  return c.kind == EvidenceKind::cm ? check_cm(c.key, c.function, grid, max_order, 1, options)
                                    : check_lcm_log(c.key, c.function, grid, max_order, options);
}

// ---------------------------------------------------------------- regions

const char* to_string(RegionFamily family) {
  return family == RegionFamily::Lambda ? "Lambda" : "Phi";
}

const char* to_string(RegionClaim claim) {
  switch (claim) {
    case RegionClaim::positive_decreasing:
      return "positive_decreasing";
    case RegionClaim::negative_increasing:
      return "negative_increasing";
    case RegionClaim::unclassified:
      return "unclassified";
  }
  return "?";
}

RegionClassification classify_region(RegionFamily family, const Real& p, const Real& q) {
  if (!(p > 0)) throw std::invalid_argument("classify_region: p must be > 0");
  const auto pd = RegionClaim::positive_decreasing;
  const auto ni = RegionClaim::negative_increasing;
  const Real p2 = p * p;
  if (family == RegionFamily::Lambda) {
    if (q <= 0) return {"1a", pd};
    if (p < 1 && p * q <= 1) return {"1b", pd};
    if (q > 0 && q * p2 == 1 && q <= 1) return {"1c", pd};
    if (p >= 1 && p * q >= 1) return {"2a", ni};
    if (q * p2 == 1 && q >= 1) return {"2b", ni};
    return {};
  }
  if (p >= 1 && q <= 0) return {"3a", pd};
  if (p < 1 && q <= 1) return {"3b", pd};
  if (p2 * q < 1 && q * (p2 - 1) * ((1 + 3 * q) * p2 - 4) <= 0) return {"3c", pd};
  if (p2 * q == 1 && q > 0 && q <= 1) return {"3d", pd};
  if (4 <= p2 * (1 + 3 * q) && p2 * (1 + 3 * q) <= 1 + 3 * q) return {"4a", ni};
  if (p > 1 && q >= 1) return {"4b", ni};
  return {};
}

RegionReport check_region_claims(RegionFamily family, const Real& p, const Real& q,
                                 const Grid& grid, const MonotonicityOptions& options) {
  RegionReport r{family, p, q, classify_region(family, p, q), grid, 0, 0, 0};
  const CatalogFunction f =
      family == RegionFamily::Lambda ? CatalogFunction::Lambda(p, q) : CatalogFunction::Phi(p, q);
  grid.validate(f.domain, 0);
  std::vector<Real> values;
  for (unsigned i = 0; i < grid.count; ++i)
    values.push_back(catalog_eval(f, grid.point(i), options.precision));
  r.min_value = *std::min_element(values.begin(), values.end());
  r.max_value = *std::max_element(values.begin(), values.end());
  const bool decreasing = r.classification.claim != RegionClaim::negative_increasing;
  bool first = true;
  for (unsigned i = 0; i + 1 < values.size(); ++i) {
    const Real step = decreasing ? values[i + 1] - values[i] : values[i] - values[i + 1];
    if (first || step > r.worst_monotone_step) r.worst_monotone_step = step;
    first = false;
  }
  if (r.classification.claim == RegionClaim::unclassified) return r;
  Real scale = 0;
  for (const auto& v : values) scale = std::max(scale, abs(v));
  const Real tol0 = difference_tolerance(0, scale, options);
  const Real tol1 = difference_tolerance(1, scale, options);
  // strict claims: values must clear zero by more than the rounding tolerance
  r.sign_ok = decreasing ? r.min_value > tol0 : r.max_value < -tol0;
  r.monotone_ok = r.worst_monotone_step < -tol1;
  r.pass = r.sign_ok && r.monotone_ok;
  return r;
}

const std::vector<RegionRepresentative>& region_representatives() {
  static const std::vector<RegionRepresentative> reps = {
      {RegionFamily::Lambda, "1a", Real(2), Real(-1)},
      {RegionFamily::Lambda, "1b", Real(0.5), Real(1)},
      {RegionFamily::Lambda, "1c", Real(2), Real(0.25)},
      {RegionFamily::Lambda, "2a", Real(2), Real(1)},
      {RegionFamily::Lambda, "2b", Real(0.5), Real(4)},
      {RegionFamily::Phi, "3a", Real(2), Real(-1)},
      {RegionFamily::Phi, "3b", Real(0.5), Real(1)},
      {RegionFamily::Phi, "3c", Real(1.2), Real(0.5)},
      {RegionFamily::Phi, "3d", Real(2), Real(0.25)},
      {RegionFamily::Phi, "4a", Real(0.5), Real(6)},
      {RegionFamily::Phi, "4b", Real(2), Real(1)},
  };
  return reps;
}

nlohmann::ordered_json to_json(const RegionReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["family"] = to_string(r.family);
  j["p"] = to_string(r.p, 10);
  j["q"] = to_string(r.q, 10);
  j["region"] = r.classification.region;
  j["claim"] = to_string(r.classification.claim);
  j["grid"] = {{"start", to_string(r.grid.start)},
               {"step", to_string(r.grid.step)},
               {"count", r.grid.count}};
  j["min"] = to_string(r.min_value, 12);
  j["max"] = to_string(r.max_value, 12);
  j["worst_monotone_step"] = to_string(r.worst_monotone_step, 12);
  j["sign_ok"] = r.sign_ok;
  j["monotone_ok"] = r.monotone_ok;
  j["pass"] = r.pass;
  return j;
}

std::vector<CMReport> h_lambda_scan(const Real& step, unsigned max_order,
                                    const MonotonicityOptions& options) {
  std::vector<CMReport> out;
  for (double lambda : kHLambdaScan) {
    const CatalogFunction f = CatalogFunction::H_lambda(Real(lambda));
    const Grid grid = Grid::for_domain(f.domain, step, 64);
    grid.validate(f.domain, max_order);
    auto log_h = [&](const Real& x) { return log(catalog_eval(f, x, options.precision)); };
    out.push_back(check_lcm_log(f.label(), log_h, grid, max_order, options));
  }
  return out;
}

}  // namespace burnside
