#include "burnside/expoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace burnside {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Poly::Poly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

bool Poly::all_coefficients_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c >= 0; });
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return Poly(std::move(d));
}

Rational Poly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Real Poly::evaluate(const Real& t) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + to_real(*it);
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly operator-(Poly a) { return a *= Rational(-1); }

// ---------------------------------------------------------------- ExpPoly

ExpPoly::ExpPoly(TermMap terms) {
  for (auto& [k, p] : terms)
    if (!p.is_zero()) terms_.emplace(k, std::move(p));
}

ExpPoly ExpPoly::constant(const Rational& c) { return term(0, Poly::constant(c)); }

ExpPoly ExpPoly::variable() { return term(0, Poly::monomial(1, 1)); }

ExpPoly ExpPoly::exponential(unsigned k) { return term(k, Poly::constant(1)); }

ExpPoly ExpPoly::term(unsigned k, Poly p) {
  ExpPoly f;
  f.add_term(k, p);
  return f;
}

void ExpPoly::add_term(unsigned k, const Poly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly ExpPoly::polynomial(unsigned k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Poly{} : it->second;
}

unsigned ExpPoly::max_exp_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

unsigned ExpPoly::min_exp_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

bool ExpPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
    return kv.second.all_coefficients_nonnegative();
  });
}

bool ExpPoly::is_polynomial() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ExpPoly::value_at_zero() const {
  Rational acc = 0;
  for (const auto& [k, p] : terms_) acc += p.coefficient(0);
  return acc;
}

Rational ExpPoly::content() const {
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [k, p] : terms_) {
    for (const auto& c : p.coefficients()) {
      if (c == 0) continue;
      num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
      den_lcm = lcm(den_lcm, BigInt(denominator(c)));
    }
  }
  if (num_gcd == 0) return 1;
  return Rational(num_gcd, den_lcm);
}

ExpPoly ExpPoly::shifted_down(unsigned k) const {
  if (k > min_exp_degree() && !terms_.empty())
    throw std::invalid_argument("shifted_down: e^{kt} is not a common factor");
  ExpPoly out;
  for (const auto& [deg, p] : terms_) out.terms_.emplace(deg - k, p);
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  for (const auto& [k, p] : other.terms_) add_term(k, p);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) {
  for (const auto& [k, p] : other.terms_) add_term(k, -p);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, p] : terms_) p *= c;
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [ka, pa] : a.terms_)
    for (const auto& [kb, pb] : b.terms_) out.add_term(ka + kb, pa * pb);
  return out;
}

ExpPoly operator-(ExpPoly a) { return a *= Rational(-1); }

// ---------------------------------------------------------------- calculus

ExpPoly differentiate(const ExpPoly& f) {
  ExpPoly::TermMap out;
  for (const auto& [k, p] : f.terms()) {
    Poly d = p.derivative();
    if (k != 0) d += p * Rational(k);
    out.emplace(k, std::move(d));
  }
  return ExpPoly(std::move(out));
}

Real eval(const ExpPoly& f, const Real& t) {
  using boost::multiprecision::isfinite;
  if (!isfinite(t)) throw std::domain_error("eval: t must be finite");
  if (f.is_zero()) return 0;
  const Real et = exp(t);
  Real acc = 0;
  Real power = 1;  // e^{k t}
  unsigned k_power = 0;
  for (const auto& [k, p] : f.terms()) {
    while (k_power < k) {
      power *= et;
      ++k_power;
    }
    if (!isfinite(power) || (t > 0 && power == 0))
      throw std::overflow_error("eval: e^{kt} overflows at t = " + to_string(t));
    acc += p.evaluate(t) * power;
  }
  if (!isfinite(acc)) throw std::overflow_error("eval: result overflows");
  return acc;
}

double eval(const ExpPoly& f, double t) {
  const double v = to_double(eval(f, Real(t)));
  if (!std::isfinite(v))
    throw std::overflow_error("eval: value exceeds double range at t = " +
                              std::to_string(t));
  return v;
}

Rational derivative_limit_at_zero(const ExpPoly& f, unsigned n) {
  ExpPoly g = f;
  for (unsigned i = 0; i < n; ++i) g = differentiate(g);
  return g.value_at_zero();
}

std::vector<Rational> taylor_coeffs(const ExpPoly& f, std::size_t count) {
  if (count == 0) throw std::invalid_argument("taylor_coeffs: count must be >= 1");
  std::vector<Rational> inv_factorial(count);
  inv_factorial[0] = 1;
  for (std::size_t m = 1; m < count; ++m) inv_factorial[m] = inv_factorial[m - 1] / m;

  std::vector<Rational> out(count);
  for (const auto& [k, p] : f.terms()) {
    // series of e^{kt}: k^m / m!
    std::vector<Rational> ek(count);
    Rational kp = 1;
    for (std::size_t m = 0; m < count; ++m) {
      ek[m] = (k == 0) ? Rational(m == 0 ? 1 : 0) : kp * inv_factorial[m];
      kp *= k;
    }
    const auto& c = p.coefficients();
    for (std::size_t j = 0; j < c.size() && j < count; ++j) {
      if (c[j] == 0) continue;
      for (std::size_t m = 0; j + m < count; ++m)
        if (ek[m] != 0) out[j + m] += c[j] * ek[m];
    }
  }
  return out;
}

// ---------------------------------------------------------------- rendering

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Rational mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << "-";
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0 || !unit) os << mag.str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string render(const ExpPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [k, p] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << render(p) << ")";
    if (k == 1)
      os << "*E^(t)";
    else if (k > 1)
      os << "*E^(" << k << "*t)";
  }
  return os.str();
}

}  // namespace burnside
