#include "burnside/acceptance.hpp"

#include "burnside/am_certificate.hpp"
#include "burnside/bounds.hpp"
#include "burnside/certificate_functions.hpp"
#include "burnside/monotonicity.hpp"
#include "burnside/quadrature.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace burnside {

namespace {

// pinned tolerances
const double kCertifySeconds = 10;
const double kTaylorSeconds = 30;
const unsigned kTaylorCount = 200;
const char* const kRepresentationTol = "1e-10";
const char* const kPsiTol = "1e-9";
const char* const kIdentityTol = "1e-10";
const char* const kQuadratureTol = "1e-12";
const char* const kBetaTol = "5e-6";
const char* const kRatioTol = "1e-3";

using Check = bool (*)(std::ostringstream&);

std::string fmt(const Real& x, int digits = 6) { return to_string(x, digits); }

bool contains_in_order(const std::vector<Rational>& haystack, const std::vector<long>& needle) {
  for (std::size_t s = 0; s + needle.size() <= haystack.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < needle.size() && ok; ++i) ok = haystack[s + i] == Rational(needle[i]);
    if (ok) return true;
  }
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Real quad(const Kernel& k, const Real& x, const char* tol = kQuadratureTol) {
  const QuadratureResult r = integrate_semiinfinite(k, x, Real(tol));
  if (!r.converged) throw std::runtime_error("quadrature did not converge at x = " + fmt(x));
  return r.value;
}

bool certification(std::ostringstream& d) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<Rational> f1, f2;
  unsigned deepest = 0;
  for (const auto& nf : certificate_functions()) {
    const AMResult r = certify_absolutely_monotonic(certificate_function(nf.name), 64);
    if (const auto* c = std::get_if<AMCertificate>(&r)) {
      ok = ok && replay(*c);
      deepest = std::max<unsigned>(deepest, c->depth());
      if (nf.name == "f1") f1 = c->limits();
      if (nf.name == "f2") f2 = c->limits();
    } else {
      d << nf.name << " not certified; ";
      ok = false;
    }
  }
  const bool f1_ok = contains_in_order(f1, {0, 0, 0, 0, 10, 74, 231, 408});
  const bool f2_ok = contains_in_order(
      f2, {1288, 26880, 24238, 181608, 1070320, 5354016, 4634026, 13963144, 38142544, 14800923,
           20133558, 25428438});
  const double s = seconds_since(t0);
  d << "7/7 certified, max depth " << deepest << ", f1 limits " << (f1_ok ? "match" : "MISMATCH")
    << ", f2 limits " << (f2_ok ? "match" : "MISMATCH");
  return ok && f1_ok && f2_ok && s < kCertifySeconds;
}

bool taylor(std::ostringstream& d) {
  const auto t0 = std::chrono::steady_clock::now();
  unsigned negatives = 0;
  for (const auto& nf : certificate_functions())
    for (const Rational& c : taylor_coeffs(certificate_function(nf.name), kTaylorCount))
      negatives += c < 0;
  const double s = seconds_since(t0);
  d << negatives << " negative coefficients among 7 x " << kTaylorCount;
  return negatives == 0 && s < kTaylorSeconds;
}

bool representations(std::ostringstream& d) {
  const Real tol(kRepresentationTol);
  Real worst = 0;
  const Kernel burnside = Kernel::standard(KernelFamily::burnside_b);
  for (const char* x : {"-0.49", "-0.25", "0.5", "1", "2", "5", "10", "50"})
    worst = std::max(worst, abs(quad(burnside, Real(x)) - remainder(Remainder::b, Real(x))));
  const Kernel binet = Kernel::standard(KernelFamily::binet_theta);
  for (const char* x : {"0.5", "1", "2", "10", "100"})
    worst = std::max(worst, abs(quad(binet, Real(x)) - remainder(Remainder::theta, Real(x))));
  const Kernel e46 = Kernel::standard(KernelFamily::entry46);
  for (const char* x : {"0.5", "1", "3", "10"})
    worst = std::max(worst, abs(quad(e46, Real(x)) - entry46_closed_form(Real(x))));
  d << "8 + 5 + 4 points, max abs error " << fmt(worst, 3);
  return worst < tol;
}

bool psi_identities(std::ostringstream& d) {
  const Kernel lam = Kernel::standard(KernelFamily::lambda_gr);
  const Kernel phi = Kernel::standard(KernelFamily::phi_magnus);
  Real worst = 0;
  for (const char* xs : {"0.5", "1", "2", "5"}) {
    const Real x(xs);
    const Real psi = log(x) - 1 / (2 * x) - 2 * quad(lam, x, "1e-11");
    const Real psi_half = log(x) + 2 * quad(phi, x, "1e-11");
    worst = std::max(worst, abs(psi - digamma(x)));
    worst = std::max(worst, abs(psi_half - digamma(x + Real(0.5))));
  }
  d << "psi(x) and psi(x+1/2) at 4 points, max abs error " << fmt(worst, 3);
  return worst < Real(kPsiTol);
}

bool sweep(std::ostringstream& d, const std::vector<MonotonicityClaim>& claims, unsigned order) {
  unsigned passed = 0, flagged = 0, runs = 0;
  for (const auto& c : claims)
    for (const char* h : {"0.125", "0.5"}) {
      const CMReport r = check_claim(c, Real(h), order);
      ++runs;
      passed += r.pass();
      flagged += r.counterexample_candidate();
    }
  d << passed << "/" << runs << " claim-grid pairs pass to order " << order << ", " << flagged
    << " flagged";
  return passed == runs && flagged == 0;
}

bool theorem1_sweep(std::ostringstream& d) { return sweep(d, theorem1_claims(), 8); }
bool theorem2_sweep(std::ostringstream& d) { return sweep(d, theorem2_claims(), 6); }

bool constants(std::ostringstream& d) {
  const Real upper = sqrt(Real(2)) * exp(Real(1) / 12);
  const Real lower = sqrt(2 * pi_real() / exp(Real(1)));
  const Real h0 = target_value(BoundTarget::H, Real("0.001"));
  const Real hinf = target_value(BoundTarget::H, Real(10000));
  const auto xs = log_points(Real("0.001"), Real(10000), 100);
  bool decreasing = true;
  Real prev = target_value(BoundTarget::H, xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const Real v = target_value(BoundTarget::H, xs[i]);
    decreasing = decreasing && v < prev;
    prev = v;
  }
  const bool near0 = h0 > Real("1.5371") - Real("1e-3") && h0 < upper;
  const bool far = hinf > lower && hinf < lower + Real("1e-3");
  d << "H(0.001) = " << fmt(h0, 8) << " < " << fmt(upper, 8) << ", H(1e4) - sqrt(2pi/e) = "
    << fmt(hinf - lower, 3) << ", decreasing on 100 log points: " << (decreasing ? "yes" : "no");
  return near0 && far && decreasing;
}

bool vartheta_min(std::ostringstream& d) {
  const Real beta = vartheta_minimum();
  const auto vh = CatalogFunction::vartheta_hat();
  const Real step("0.05");
  const Real at = catalog_eval(vh, beta);
  const bool left = catalog_eval(vh, beta - step) > at &&
                    catalog_eval(vh, beta - 2 * step) > catalog_eval(vh, beta - step);
  const bool right = catalog_eval(vh, beta + step) > at &&
                     catalog_eval(vh, beta + 2 * step) > catalog_eval(vh, beta + step);
  d << "beta = " << fmt(beta, 9) << ", decreasing before: " << (left ? "yes" : "no")
    << ", increasing after: " << (right ? "yes" : "no");
  return abs(beta - Real("0.34142")) < Real(kBetaTol) && left && right;
}

bool catalog(std::ostringstream& d) {
  std::size_t total = 0;
  for (const char* name : {"trigamma-envelope", "shifted-root", "h-constants", "trigamma-integer"}) {
    const BoundSpec s = bound_spec(name);
    const auto v = verify_bound_on_grid(s, default_grid(s));
    d << name << ": " << v.size() << "; ";
    total += v.size();
  }
  d << "total violations " << total;
  return total == 0;
}

bool asymptotic_comparison(std::ostringstream& d) {
  const ComparisonResult r = compare_bounds(bound_spec("h-constants"),
                                            bound_spec("half-shift", {{"k", Real(1)}}),
                                            BoundSide::upper, Real(1), Real(10000));
  const Real limit = exp(Real(7) / 12) / sqrt(pi_real());
  d << "asymptotic winner " << r.asymptotic_winner << ", ratio at 1e4 = " << fmt(r.right_ratio, 10)
    << " vs e^(7/12)/sqrt(pi) = " << fmt(limit, 10);
  return r.asymptotic_winner == "half-shift" && abs(r.right_ratio - limit) < Real(kRatioTol);
}

bool best_shift_check(std::ostringstream& d) {
  const std::vector<Real> shifts = {0, Real("0.25"), Real("0.5"), Real("0.75"), 1};
  bool ok = true;
  for (unsigned n : {5u, 10u, 20u}) {
    const Real a = best_shift(n, shifts);
    d << (n == 5 ? "" : ", ") << "n = " << n << ": a = " << fmt(a, 3);
    ok = ok && a == Real("0.5");
  }
  return ok;
}

bool regions(std::ostringstream& d) {
  const Grid g{Real("0.1"), (Real(20) - Real("0.1")) / 199, 200};
  unsigned passed = 0;
  const auto& reps = region_representatives();
  for (const auto& rep : reps) {
    const RegionReport r = check_region_claims(rep.family, rep.p, rep.q, g);
    if (r.pass)
      ++passed;
    else
      d << to_string(rep.family) << " " << rep.region << " failed; ";
  }
  d << passed << "/" << reps.size() << " subregions pass on 200 points of (0.1, 20)";
  return passed == reps.size();
}

bool identities(std::ostringstream& d) {
  const Kernel burnside = Kernel::standard(KernelFamily::burnside_b);
  const Kernel binet = Kernel::standard(KernelFamily::binet_theta);
  Real worst = 0;
  auto track = [&](const Real& v) { worst = std::max(worst, abs(v)); };
  const Real half(0.5);
  for (const char* xs : {"0.25", "0.5", "1", "2", "5", "10", "20"}) {
    const Real x(xs);
    const Real b = quad(burnside, x);
    const Real theta = quad(binet, x);
    const Real g = (x + half) * log1p(1 / (2 * x));
    // w = 12x [ln Gamma(x+1) - ln sqrt(2 pi) - (x+1/2) ln(x+1/2) + x + 1/2]
    track(12 * x * b -
          12 * x * (log_gamma(x + 1) - log_sqrt_two_pi() - (x + half) * log(x + half) + x + half));
    track(12 * x * theta - (12 * x * b - 6 * x + 12 * x * g));
    track(theta - (b + g - half));
  }
  for (const char* xs : {"-0.4", "-0.2", "0", "0.5", "1", "5", "10"}) {
    const Real x(xs);
    const Real rhs = ((2 * x + 1) * log1p(1 / (2 * x + 1)) - 1) / 2 + quad(binet, x + 1);
    track(quad(burnside, x) - rhs);
  }
  const auto F = CatalogFunction::BigF();
  const auto G = CatalogFunction::BigG();
  for (const Real& x : log_points(Real("0.01"), Real(1000), 25))
    track(catalog_eval(F, x) - (1 - 8 * x * catalog_eval(G, x)));
  d << "5 identities on sampled grids, max abs residual " << fmt(worst, 3);
  return worst < Real(kIdentityTol);
}

struct Entry {
  const char* name;
  Check check;
};

const Entry kEntries[kCriteriaCount] = {
    {"certification", certification},
    {"taylor-necessary", taylor},
    {"representations", representations},
    {"psi-identities", psi_identities},
    {"theorem1-sweep", theorem1_sweep},
    {"theorem2-sweep", theorem2_sweep},
    {"h-constants", constants},
    {"vartheta-minimum", vartheta_min},
    {"bound-catalog", catalog},
    {"asymptotic-comparison", asymptotic_comparison},
    {"best-shift", best_shift_check},
    {"lambda-phi-regions", regions},
    {"identity-suite", identities},
};

}  // namespace

CriterionResult run_criterion(unsigned id) {
  if (id < 1 || id > kCriteriaCount) throw std::out_of_range("criterion id must be 1..13");
  const Entry& e = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  try {
    r.pass = e.check(detail);
    r.detail = detail.str();
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = detail.str() + "error: " + ex.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (unsigned id = 1; id <= kCriteriaCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << (r.id < 10 ? " " : "") << r.id << " " << r.name << ": "
      << r.detail << buf;
  return out.str();
}

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  bool all = true;
  auto& arr = j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  j["pass"] = all;
  return j;
}

}  // namespace burnside
