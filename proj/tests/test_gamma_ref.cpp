#include "burnside/gamma_ref.hpp"

#include "doctest.h"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <random>

using namespace burnside;

namespace {

using Dec = boost::multiprecision::cpp_dec_float_50;

Real from_dec(const Dec& d) { return Real(d.str(60)); }
Dec to_dec(const Real& r) { return Dec(r.str(60)); }

double absdiff(const Real& a, const Real& b) { return to_double(abs(a - b)); }

double reldiff(const Real& a, const Real& b) {
  return to_double(abs(a - b) / std::max(Real(1e-300), abs(b)));
}

const Real kEuler = boost::math::constants::euler<Real>();

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rational(-1, 2));
  CHECK(bernoulli(2) == make_rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == make_rational(-1, 30));
  CHECK(bernoulli(12) == make_rational(-691, 2730));
  CHECK(bernoulli(20) == make_rational(-174611, 330));
  CHECK_THROWS_AS(bernoulli(100000), std::out_of_range);
}

TEST_CASE("log gamma classical values") {
  CHECK(abs(log_gamma(Real(1))) < Real("1e-45"));
  CHECK(abs(log_gamma(Real(2))) < Real("1e-45"));
  CHECK(reldiff(log_gamma(Real(0.5)), log(sqrt(pi_real()))) < 1e-40);
  CHECK(reldiff(log_gamma(Real(4)), log(Real(6))) < 1e-40);
  CHECK(reldiff(log_gamma(Real(11)), log(Real(3628800))) < 1e-40);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429).epsilon(1e-10));
  CHECK_THROWS_AS(log_gamma(Real(0)), std::domain_error);
  CHECK_THROWS_AS(log_gamma(Real(-1)), std::domain_error);
}

TEST_CASE("log gamma against an independent multiprecision implementation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> logx(-6, 7);
  for (int i = 0; i < 60; ++i) {
    const Real x(std::pow(10.0, logx(rng)));
    const Real oracle = from_dec(boost::math::lgamma(to_dec(x)));
    const BoundedValue v = log_gamma_bounded(x);
    INFO("x = " << to_string(x));
    CHECK(reldiff(v.value, oracle) < 1e-14);
    CHECK(absdiff(v.value, oracle) < 1e-30 * std::max(1.0, to_double(abs(oracle))));
    CHECK(v.error_bound < Real("1e-40") * std::max(Real(1), abs(v.value)));
  }
}

TEST_CASE("log gamma precision configuration") {
  EvalPrecision p;
  p.working_digits = 24;
  CHECK_THROWS_AS(log_gamma(Real(2), p), std::invalid_argument);
  p.working_digits = 51;
  CHECK_THROWS_AS(log_gamma(Real(2), p), std::invalid_argument);
  p.working_digits = 30;
  p.shift_threshold = 9.5;
  CHECK_THROWS_AS(log_gamma(Real(2), p), std::invalid_argument);
  p.shift_threshold = 12;
  CHECK(reldiff(log_gamma(Real("3.7"), p), log_gamma(Real("3.7"))) < 1e-28);
}

TEST_CASE("digamma and trigamma") {
  const Real pi = pi_real();
  CHECK(reldiff(digamma(Real(1)), -kEuler) < 1e-40);
  CHECK(reldiff(digamma(Real(2)), 1 - kEuler) < 1e-40);
  CHECK(reldiff(trigamma(Real(1)), pi * pi / 6) < 1e-40);
  // psi'(1/2) = pi^2/2 and psi'(x+1) = psi'(x) - 1/x^2
  CHECK(reldiff(trigamma(Real(1.5)), pi * pi / 2 - 4) < 1e-40);
  CHECK(to_double(trigamma(Real(1.5))) == doctest::Approx(0.9348022005).epsilon(1e-10));
  CHECK(reldiff(digamma(Real(0.5)), -kEuler - 2 * log(Real(2))) < 1e-40);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logx(-3, 4);
  for (int i = 0; i < 40; ++i) {
    const Real x(std::pow(10.0, logx(rng)));
    const auto [psi, psi1] = digamma_trigamma(x);
    INFO("x = " << to_string(x));
    CHECK(reldiff(psi, from_dec(boost::math::digamma(to_dec(x)))) < 1e-13);
    CHECK(reldiff(psi1, from_dec(boost::math::trigamma(to_dec(x)))) < 1e-13);
  }
  CHECK_THROWS_AS(digamma(Real(0)), std::domain_error);
}

TEST_CASE("remainders at x = 1") {
  const Real b1 = Real(1.5) - log_sqrt_two_pi() - Real(1.5) * log(Real(1.5));
  CHECK(absdiff(remainder(Remainder::b, Real(1)), b1) < 1e-40);
  CHECK(remainder(Remainder::b, 1.0) == doctest::Approx(-0.0271361).epsilon(1e-5));
  CHECK(absdiff(remainder(Remainder::theta, Real(1)), 1 - log_sqrt_two_pi()) < 1e-40);
  CHECK(remainder(Remainder::theta, 1.0) == doctest::Approx(0.0810614).epsilon(1e-6));
  CHECK(absdiff(remainder(Remainder::w, Real(1)), 12 * b1) < 1e-40);
}

TEST_CASE("remainder domains and names") {
  CHECK_THROWS_AS(remainder(Remainder::theta, Real(0)), std::domain_error);
  CHECK_THROWS_AS(remainder(Remainder::b, Real(-0.5)), std::domain_error);
  CHECK_NOTHROW(remainder(Remainder::b, Real(-0.49)));
  for (auto r : {Remainder::theta, Remainder::vartheta, Remainder::b, Remainder::w})
    CHECK(remainder_from_name(to_string(r)) == r);
  CHECK_FALSE(remainder_from_name("beta").has_value());
}

TEST_CASE("w/(12x) equals b and vartheta/(12x) equals theta") {
  for (double xd : {0.01, 0.3, 1.0, 7.5, 123.0}) {
    const Real x(xd);
    CHECK(absdiff(remainder(Remainder::w, x) / (12 * x), remainder(Remainder::b, x)) < 1e-40);
    CHECK(absdiff(remainder(Remainder::vartheta, x) / (12 * x),
                  remainder(Remainder::theta, x)) < 1e-40);
  }
}

TEST_CASE("remainder identities") {
  for (double xd : {0.3, 1.0, 2.0, 10.0, 100.0}) {
    const Real x(xd);
    const Real g = (x + Real(0.5)) * log1p(1 / (2 * x));
    const Real theta = remainder(Remainder::theta, x);
    const Real b = remainder(Remainder::b, x);
    CHECK(absdiff(theta - b - g + Real(0.5), 0) < 1e-12);
    CHECK(absdiff(remainder(Remainder::vartheta, x) - remainder(Remainder::w, x) + 6 * x -
                      12 * x * g,
                  0) < 1e-10);
  }
  for (double xd : {-0.4, 0.0, 1.0, 10.0}) {
    const Real x(xd);
    const Real rhs = ((2 * x + 1) * log1p(1 / (2 * x + 1)) - 1) / 2 +
                     remainder(Remainder::theta, x + 1);
    CHECK(absdiff(remainder(Remainder::b, x), rhs) < 1e-12);
  }
}

TEST_CASE("b(x) is negative and x b(x) tends to -1/24") {
  for (double xd : {-0.45, 0.0, 0.5, 3.0, 1e3})
    CHECK(remainder(Remainder::b, Real(xd)) < 0);
  const Real x(1e6);
  CHECK(absdiff(x * remainder(Remainder::b, x), Real(-1) / 24) < 1e-6);
  CHECK(absdiff(x * remainder(Remainder::theta, x), Real(1) / 12) < 1e-6);
}

TEST_CASE("theta agrees on both sides of the shift point") {
  // large-argument branch uses the series directly
  for (double xd : {19.5, 20.0, 20.5, 25.0}) {
    const Real x(xd);
    const Real direct =
        log_gamma(x) - (x - Real(0.5)) * log(x) + x - log_sqrt_two_pi();
    CHECK(absdiff(remainder(Remainder::theta, x), direct) < 1e-40);
  }
}

TEST_CASE("catalog: H limits") {
  const auto H = CatalogFunction::H();
  const Real upper = sqrt(Real(2)) * exp(Real(1) / 12);
  const Real lower = sqrt(2 * pi_real() / exp(Real(1)));
  const Real h0 = catalog_eval(H, Real("0.001"));
  CHECK(h0 < upper);
  CHECK(h0 > Real("1.5371") - Real("1e-3"));
  CHECK(to_double(upper) == doctest::Approx(1.5371144).epsilon(1e-7));
  CHECK(to_double(lower) == doctest::Approx(1.5203469).epsilon(1e-7));
  const Real h_inf = catalog_eval(H, Real(1e4));
  CHECK(h_inf > lower);
  CHECK(h_inf < lower + Real("1e-3"));
  CHECK(absdiff(catalog_eval(CatalogFunction::H_lambda(Real(0.5)), Real(2)),
                catalog_eval(H, Real(2))) < 1e-45);
  CHECK_THROWS_AS(catalog_eval(CatalogFunction::H_lambda(Real(-1)), Real(1)),
                  std::invalid_argument);
}

TEST_CASE("catalog: BigF and BigG") {
  const auto F = CatalogFunction::BigF();
  const auto G = CatalogFunction::BigG();
  for (double xd : {0.01, 0.5, 1.0, 10.0, 1e3, 1e6}) {
    const Real x(xd);
    CHECK(absdiff(catalog_eval(F, x), 1 - 8 * x * catalog_eval(G, x)) < 1e-13);
  }
  // F(x) ~ 1/(6x) for large x
  CHECK(abs(catalog_eval(F, Real(1e8))) < Real("1e-8"));
  CHECK(to_double(Real(1e4) * catalog_eval(F, Real(1e4))) == doctest::Approx(1.0 / 6).epsilon(1e-3));
}

TEST_CASE("catalog: F_alpha and g_alpha") {
  for (double xd : {0.2, 1.0, 5.0}) {
    const Real x(xd);
    const Real expected =
        exp(remainder(Remainder::theta, x) - trigamma(x + Real(0.5)) / 12);
    CHECK(absdiff(catalog_eval(CatalogFunction::F_alpha(Real(0.5)), x), expected) < 1e-40);
    // g_{1/2} = sqrt(2 pi / e) e^{b}
    CHECK(absdiff(catalog_eval(CatalogFunction::g_alpha(Real(0.5)), x),
                  sqrt(2 * pi_real() / exp(Real(1))) * exp(remainder(Remainder::b, x))) <
          1e-40);
  }
  CHECK(CatalogFunction::g_alpha(Real(-0.3)).domain.contains(Real(0.31)));
  CHECK_FALSE(CatalogFunction::g_alpha(Real(-0.3)).domain.contains(Real(0.3)));
  CHECK_THROWS_AS(catalog_eval(CatalogFunction::g_alpha(Real(-0.3)), Real(0.2)),
                  std::domain_error);
}

TEST_CASE("catalog: lambda, phi, Lambda, Phi, f_pqr") {
  // lambda, phi through their defining Binet-type differences
  for (double xd : {0.5, 1.0, 3.0}) {
    const Real x(xd);
    CHECK(lambda_gr(x) > 0);
    CHECK(phi_magnus(x) > 0);
  }
  CHECK(catalog_eval(CatalogFunction::Lambda(Real(2), Real(0)), Real(1)) > 0);
  CHECK(absdiff(catalog_eval(CatalogFunction::Lambda(Real(2), Real(0)), Real(1)),
                lambda_gr(Real(2))) < 1e-45);
  CHECK(absdiff(catalog_eval(CatalogFunction::Phi(Real(1), Real(1)), Real(3)), 0) < 1e-45);
  const Real x(1.7);
  CHECK(absdiff(catalog_eval(CatalogFunction::f_pqr(Real(2), Real(0.5), Real(3)), x),
                3 * (remainder(Remainder::theta, 2 * x) -
                     remainder(Remainder::theta, x) / 2)) < 1e-45);
  CHECK_THROWS_AS(catalog_eval(CatalogFunction::f_pqr(Real(1), Real(1), Real(0)), x),
                  std::invalid_argument);
  CHECK_THROWS_AS(catalog_eval(CatalogFunction::Lambda(Real(0), Real(1)), x),
                  std::invalid_argument);
}

TEST_CASE("catalog names round trip") {
  for (auto n : {CatalogName::theta, CatalogName::vartheta, CatalogName::b, CatalogName::w,
                 CatalogName::H, CatalogName::H_lambda, CatalogName::F_alpha,
                 CatalogName::g_alpha, CatalogName::BigF, CatalogName::BigG,
                 CatalogName::Lambda_pq, CatalogName::Phi_pq, CatalogName::f_pqr,
                 CatalogName::vartheta_hat})
    CHECK(catalog_name_from_string(to_string(n)) == n);
  CHECK_FALSE(catalog_name_from_string("zeta").has_value());
  CHECK(CatalogFunction::b().domain.str() == "(-0.5, inf)");
}

TEST_CASE("vartheta minimum") {
  const Real beta = vartheta_minimum();
  CHECK(absdiff(beta, Real("0.34142")) < 5e-6);

  const auto vh = CatalogFunction::vartheta_hat();
  const Real h("1e-12");
  const Real slope = (catalog_eval(vh, beta + h) - catalog_eval(vh, beta - h)) / (2 * h);
  CHECK(abs(slope) < Real("1e-8"));
  const Real at_beta = catalog_eval(vh, beta);
  CHECK(catalog_eval(vh, beta - Real(0.05)) > at_beta);
  CHECK(catalog_eval(vh, beta + Real(0.05)) > at_beta);
}

TEST_CASE("12x theta(x) has no interior minimum") {
  // beta is the stationary point of vartheta_hat, not of 12x theta
  Real prev = remainder(Remainder::vartheta, Real("0.01"));
  for (int i = 2; i <= 200; ++i) {
    const Real x = Real(i) / 100;
    const Real v = remainder(Remainder::vartheta, x);
    CHECK(v > prev);
    prev = v;
  }
}
