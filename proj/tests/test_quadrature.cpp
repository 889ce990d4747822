#include "burnside/quadrature.hpp"

#include "burnside/certificate_functions.hpp"
#include "burnside/expoly_parser.hpp"

#include "doctest.h"

#include <boost/math/constants/constants.hpp>

#include <algorithm>

using namespace burnside;

namespace {

double absdiff(const Real& a, const Real& b) { return to_double(abs(a - b)); }

Real integrate(const Kernel& k, double x, const char* tol = "1e-12") {
  const QuadratureResult r = integrate_semiinfinite(k, Real(x), Real(tol));
  REQUIRE(r.converged);
  return r.value;
}

/// Plain trapezoid on a uniform grid, used only as an independent check of
/// tail integrals; the integrands are smooth and decay quickly.
Real brute_tail(const Kernel& k, const Real& x, const Real& T, const Real& length, int n) {
  const Real h = length / n;
  Real acc = (k.integrand(x, T) + k.integrand(x, T + length)) / 2;
  for (int i = 1; i < n; ++i) acc += k.integrand(x, T + h * i);
  return acc * h;
}

}  // namespace

TEST_CASE("kernel limits at zero") {
  const Real tiny("1e-30");
  CHECK(absdiff(Kernel::standard(KernelFamily::binet_theta).value(tiny), Real(1) / 12) < 1e-25);
  CHECK(absdiff(Kernel::standard(KernelFamily::burnside_b).value(tiny), Real(-1) / 12) < 1e-25);
  CHECK(absdiff(Kernel::standard(KernelFamily::entry46).value(tiny), Real(1) / 3) < 1e-25);
  CHECK(absdiff(Kernel::standard(KernelFamily::lambda_gr).value(tiny), 1 / (2 * pi_real())) < 1e-25);
  CHECK(absdiff(Kernel::standard(KernelFamily::phi_magnus).value(tiny), 0) < 1e-25);
}

TEST_CASE("burnside kernel series starts -1/12") {
  // (1 - e^t/(2t) + 1/(e^{2t}-1)) / t: series oracle -1/12 - t/12 + ...
  const Kernel k = Kernel::standard(KernelFamily::burnside_b);
  const auto& s = k.near_zero_series_exact();
  REQUIRE(s.size() == kSeriesTerms);
  CHECK(s[0] == make_rational(-1, 12));
  CHECK(s[1] == make_rational(-1, 12));
}

TEST_CASE("binet kernel series has Bernoulli coefficients") {
  // (1/(e^t-1) - 1/t + 1/2)/t = sum_{n>=2} B_n t^{n-2} / n!
  const Kernel k = Kernel::standard(KernelFamily::binet_theta);
  const auto& s = k.near_zero_series_exact();
  Rational fact = 1;
  for (unsigned n = 2; n < kSeriesTerms + 2; ++n) {
    fact *= n;
    CHECK(s[n - 2] == bernoulli(n) / fact);
  }
}

TEST_CASE("entry46 kernel value at t = 1") {
  const Real v = Kernel::standard(KernelFamily::entry46).value(Real(1));
  CHECK(absdiff(v, 2 - 5 / exp(Real(1))) < 1e-40);
  CHECK(to_double(v) == doctest::Approx(0.160603).epsilon(1e-5));
}

TEST_CASE("series and direct formula agree around the cutoff") {
  std::vector<Kernel> kernels;
  for (auto f : {KernelFamily::binet_theta, KernelFamily::burnside_b, KernelFamily::entry46,
                 KernelFamily::lambda_gr, KernelFamily::phi_magnus})
    kernels.push_back(Kernel::standard(f));
  for (const auto& r : theorem1_representations()) kernels.push_back(r.kernel);
  for (const auto& k : kernels) {
    INFO(k.name());
    for (const char* t : {"0.03", "0.0625", "0.01"}) {
      const Real tt(t);
      const Real s = k.value(tt);
      const Real d = k.direct_value(tt);
      CHECK(to_double(abs(s - d) / abs(d)) < 1e-13);
    }
    CHECK_THROWS_AS(k.value(Real(0)), std::domain_error);
    CHECK_THROWS_AS(k.value(Real(-1)), std::domain_error);
  }
}

TEST_CASE("kernels with a pole at zero are rejected") {
  SinhPowParams p;
  p.numerator = parse_expoly("E^t - 1");
  p.t_power = 2;
  CHECK_THROWS_AS(Kernel::sinhpow("pole", p), std::invalid_argument);
  p.t_power = 1;
  CHECK_NOTHROW(Kernel::sinhpow("ok", p));
  CHECK_THROWS_AS(Kernel::standard(KernelFamily::expoly_over_sinhpow), std::invalid_argument);
}

TEST_CASE("domain of convergence") {
  CHECK(Kernel::standard(KernelFamily::burnside_b).domain_lower() == Real(-0.5));
  CHECK(Kernel::standard(KernelFamily::binet_theta).domain_lower() == 0);
  CHECK(Kernel::standard(KernelFamily::entry46).domain_lower() == 0);
  for (const auto& r : theorem1_representations())
    CHECK(r.kernel.domain_lower() == Real(-0.5));
  const Kernel b = Kernel::standard(KernelFamily::burnside_b);
  CHECK_THROWS_AS(integrate_semiinfinite(b, Real(-0.5), Real("1e-10")), std::domain_error);
  CHECK_THROWS_AS(integrate_semiinfinite(b, Real(1), Real(0)), std::invalid_argument);
  CHECK_THROWS_AS(
      integrate_semiinfinite(Kernel::standard(KernelFamily::lambda_gr), Real(0), Real("1e-10")),
      std::domain_error);
}

TEST_CASE("Burnside representation reproduces b(x)") {
  const Kernel k = Kernel::standard(KernelFamily::burnside_b);
  for (double x : {-0.4, -0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    INFO("x = " << x);
    CHECK(absdiff(integrate(k, x), remainder(Remainder::b, Real(x))) < 1e-10);
  }
  CHECK(to_double(integrate(k, 1.0)) == doctest::Approx(-0.02713619).epsilon(1e-7));
  CHECK(absdiff(integrate(k, -0.49), remainder(Remainder::b, Real(-0.49))) < 1e-10);
}

TEST_CASE("Binet representation reproduces theta(x)") {
  const Kernel k = Kernel::standard(KernelFamily::binet_theta);
  for (double x : {0.5, 1.0, 2.0, 10.0, 100.0}) {
    INFO("x = " << x);
    CHECK(absdiff(integrate(k, x), remainder(Remainder::theta, Real(x))) < 1e-10);
  }
  CHECK(to_double(integrate(k, 1.0)) == doctest::Approx(0.08106147).epsilon(1e-7));
}

TEST_CASE("entry46 integral equals its closed form") {
  const Kernel k = Kernel::standard(KernelFamily::entry46);
  for (double x : {0.5, 1.0, 3.0, 10.0}) {
    const Real closed = Real(x) * Real(x) * log(1 + 1 / Real(x)) - Real(x) + Real(0.5);
    CHECK(absdiff(integrate(k, x), closed) < 1e-10);
  }
}

TEST_CASE("psi reconstructed from lambda and phi integrals") {
  const Kernel lam = Kernel::standard(KernelFamily::lambda_gr);
  const Kernel phi = Kernel::standard(KernelFamily::phi_magnus);
  for (double xd : {0.5, 1.0, 2.0, 5.0}) {
    const Real x(xd);
    const Real psi = log(x) - 1 / (2 * x) - 2 * integrate(lam, xd, "1e-11");
    const Real psi_half = log(x) + 2 * integrate(phi, xd, "1e-11");
    CHECK(absdiff(psi, digamma(x)) < 1e-9);
    CHECK(absdiff(psi_half, digamma(x + Real(0.5))) < 1e-9);
  }
  // lambda(1) = (-1/2 + gamma)/2
  const Real euler = boost::math::constants::euler<Real>();
  CHECK(absdiff(integrate(lam, 1.0, "1e-10"), (euler - Real(0.5)) / 2) < 1e-10);
  CHECK(to_double(integrate(lam, 1.0, "1e-10")) == doctest::Approx(0.03860783).epsilon(1e-7));
}

TEST_CASE("log gamma rebuilt from the quadrature theta") {
  const Kernel k = Kernel::standard(KernelFamily::binet_theta);
  for (double xd : {0.5, 1.5, 4.0, 25.0}) {
    const Real x(xd);
    const Real rebuilt = (x - Real(0.5)) * log(x) - x + log_sqrt_two_pi() + integrate(k, xd);
    CHECK(absdiff(rebuilt, log_gamma(x)) < 1e-9);
  }
}

TEST_CASE("Theorem 1 items 2-8 representations") {
  for (const auto& r : theorem1_representations()) {
    const bool positive_only = r.domain.lo == 0;
    const std::vector<double> xs = positive_only
                                       ? std::vector<double>{0.05, 0.5, 1.0, 4.0, 20.0}
                                       : std::vector<double>{-0.45, -0.2, 0.5, 3.0, 20.0};
    for (double xd : xs) {
      const Real x(xd);
      INFO(r.name << " at x = " << xd);
      REQUIRE(r.domain.contains(x));
      CHECK(absdiff(integrate(r.kernel, xd, "1e-11"), r.lhs(x)) < 1e-9);
    }
  }
}

TEST_CASE("prefactors 1/2 and 1 on items 2 and 8 overshoot by 2 and 16") {
  auto literal = [](const char* fn, unsigned a, unsigned b, long pref) {
    SinhPowParams p;
    p.numerator = certificate_function(fn);
    p.t_power = a;
    p.sinh_power = b;
    p.sinh_rate = 2;
    p.prefactor = make_rational(1, pref);
    p.weight_scale = 2;
    p.weight_shift = 1;
    return Kernel::sinhpow(std::string(fn) + "-alt", p);
  };
  const Kernel item2 = literal("f1", 3, 2, 2);
  const Kernel item8 = literal("h4", 5, 4, 1);
  const auto& reps = theorem1_representations();
  for (double xd : {0.1, 1.0, 10.0}) {
    const Real x(xd);
    CHECK(absdiff(integrate(item2, xd) / reps[1].lhs(x), 2) < 1e-8);
    CHECK(absdiff(integrate(item8, xd) / reps[7].lhs(x), 16) < 1e-6);
  }
}

TEST_CASE("tail bounds") {
  const Kernel b = Kernel::standard(KernelFamily::burnside_b);
  const Real bound50 = tail_bound(b, Real(1), Real(50));
  CHECK(bound50 < Real("1e-30"));
  const Real true_tail = abs(brute_tail(b, Real(1), Real(50), Real(20), 4000));
  CHECK(bound50 >= true_tail);

  CHECK(isfinite(tail_bound(b, Real(-0.49), Real(10))));
  const Real edge = tail_bound(b, Real(-0.49), Real(10));
  CHECK(edge >= abs(brute_tail(b, Real(-0.49), Real(10), Real(400), 40000)));

  std::vector<Kernel> kernels;
  for (auto f : {KernelFamily::binet_theta, KernelFamily::burnside_b, KernelFamily::entry46,
                 KernelFamily::lambda_gr, KernelFamily::phi_magnus})
    kernels.push_back(Kernel::standard(f));
  for (const auto& r : theorem1_representations()) kernels.push_back(r.kernel);
  for (const auto& k : kernels) {
    INFO(k.name());
    const Real x(0.7);
    Real prev = tail_bound(k, x, Real(4));
    for (int T = 8; T <= 256; T *= 2) {
      const Real next = tail_bound(k, x, Real(T));
      CHECK(next <= prev);
      prev = next;
    }
    CHECK(tail_bound(k, x, Real(16)) >= abs(brute_tail(k, x, Real(16), Real(30), 3000)));
  }
  CHECK_THROWS_AS(tail_bound(b, Real(1), Real(0.5)), EnvelopeError);
  CHECK_THROWS_AS(tail_bound(b, Real(-0.6), Real(10)), std::domain_error);
}

TEST_CASE("tolerance bookkeeping") {
  const Kernel k = Kernel::standard(KernelFamily::burnside_b);
  for (const char* tol : {"1e-6", "1e-9", "1e-12", "1e-15"}) {
    const QuadratureResult r = integrate_semiinfinite(k, Real(0.3), Real(tol));
    CHECK(r.converged);
    CHECK(r.error_estimate + r.tail_truncation <= Real(tol));
    CHECK(r.error_estimate >= 0);
    CHECK(r.tail_truncation >= 0);
    CHECK(r.evaluations > 0);
  }
  QuadratureOptions starved;
  starved.max_evaluations = 10;
  const QuadratureResult r = integrate_semiinfinite(k, Real(0.3), Real("1e-30"), starved);
  CHECK_FALSE(r.converged);
}

TEST_CASE("halving the tolerance does not increase the error") {
  for (const auto& r : theorem1_representations()) {
    for (double xd : {0.25, 2.0}) {
      const Real x(xd);
      const Real oracle = r.lhs(x);
      Real tol("1e-4");
      Real prev = abs(integrate_semiinfinite(r.kernel, x, tol).value - oracle);
      for (int i = 0; i < 12; ++i) {
        tol /= 2;
        const Real err = abs(integrate_semiinfinite(r.kernel, x, tol).value - oracle);
        INFO(r.name << " x = " << xd << " tol = " << to_string(tol, 4));
        // allowance at the level of 50-digit rounding
        CHECK(err <= prev + Real("1e-40"));
        prev = err;
      }
    }
  }
}

TEST_CASE("results are deterministic") {
  const Kernel k = Kernel::standard(KernelFamily::binet_theta);
  const auto a = integrate_semiinfinite(k, Real(0.8), Real("1e-12"));
  const auto b = integrate_semiinfinite(k, Real(0.8), Real("1e-12"));
  CHECK(a.value == b.value);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("kernel manifest round trip") {
  auto manifest = nlohmann::json::parse(R"({
    "kernels": [
      {"family": "burnside_b"},
      {"family": "lambda_gr"},
      {"name": "item5", "family": "expoly_over_sinhpow",
       "numerator": "E^(4t) - t(t+1)E^(3t) - 2E^(2t) - t(t-1)E^t + 1",
       "t_power": 3, "sinh_power": 2, "sinh_rate": 2, "prefactor": "1",
       "weight_scale": 2, "weight_shift": "1"}
    ]})");
  const auto kernels = load_kernel_manifest(manifest);
  REQUIRE(kernels.size() == 3);
  CHECK(kernels[0].family() == KernelFamily::burnside_b);
  CHECK(kernels[2].name() == "item5");
  const Real x(0.5);
  CHECK(absdiff(integrate_semiinfinite(kernels[2], x, Real("1e-12")).value,
                (2 * x + 1) * remainder(Remainder::b, x) + Real(1) / 12) < 1e-10);

  nlohmann::json again;
  for (const auto& k : kernels) again["kernels"].push_back(nlohmann::json::parse(to_json(k).dump()));
  const auto reloaded = load_kernel_manifest(again);
  CHECK(reloaded[2].params().numerator == kernels[2].params().numerator);
  CHECK(reloaded[2].params().weight_shift == 1);

  CHECK_THROWS_AS(load_kernel_manifest(nlohmann::json::parse(R"({"kernels": [{"family": "x"}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_kernel_manifest(nlohmann::json::parse(R"({"k": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      load_kernel_manifest(nlohmann::json::parse(
          R"({"kernels": [{"family": "expoly_over_sinhpow", "numerator": "E^t", "t_power": -1}]})")),
      std::invalid_argument);
}

TEST_CASE("csv rows") {
  const Kernel k = Kernel::standard(KernelFamily::burnside_b);
  const auto r = integrate_semiinfinite(k, Real(1), Real("1e-12"));
  CHECK(csv_header() == "kernel,x,value,error_estimate,evaluations");
  const std::string row = csv_row(k, Real(1), r);
  CHECK(row.rfind("burnside_b,1,-0.0271361", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 4);
}

TEST_CASE("representation lookup") {
  CHECK(representation("theorem1-item3").kernel.params().t_power == 4);
  CHECK(representation("binet").kernel.family() == KernelFamily::binet_theta);
  CHECK_THROWS_AS(representation("theorem1-item9"), std::out_of_range);
}
