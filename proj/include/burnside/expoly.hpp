#pragma once

// Exact exponential polynomials  f(t) = sum_k p_k(t) e^{k t}  over Q, k >= 0.

#include "burnside/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

/// Polynomial in t with rational coefficients; coefficient i multiplies t^i.
/// The zero polynomial has no stored coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<long> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  bool all_coefficients_nonnegative() const;

  Poly derivative() const;
  Rational evaluate(const Rational& t) const;
  Real evaluate(const Real& t) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

class ExpPoly {
 public:
  using TermMap = std::map<unsigned, Poly>;

  ExpPoly() = default;
  explicit ExpPoly(TermMap terms);

  static ExpPoly constant(const Rational& c);
  /// The identity function t.
  static ExpPoly variable();
  /// e^{k t}
  static ExpPoly exponential(unsigned k);
  static ExpPoly term(unsigned k, Poly p);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient polynomial of e^{k t} (zero if absent).
  Poly polynomial(unsigned k) const;
  /// Largest exponential degree; 0 for the zero ExpPoly.
  unsigned max_exp_degree() const;
  /// Smallest exponential degree present; 0 for the zero ExpPoly.
  unsigned min_exp_degree() const;
  bool all_coefficients_nonnegative() const;

  /// If this is a polynomial (only k = 0 present), that polynomial.
  bool is_polynomial() const;

  /// Exact value at t = 0.
  Rational value_at_zero() const;

  /// Positive rational c such that f / c has coprime integer coefficients.
  /// Returns 1 for the zero ExpPoly.
  Rational content() const;

  /// Drops the common factor e^{k t}; k = min_exp_degree().
  ExpPoly shifted_down(unsigned k) const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(const Rational& c);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const Rational& c) { return a *= c; }
  friend ExpPoly operator*(const Rational& c, ExpPoly a) { return a *= c; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(ExpPoly a);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) = default;

 private:
  void add_term(unsigned k, const Poly& p);
  TermMap terms_;
};

/// d/dt [p_k(t) e^{kt}] = (p_k'(t) + k p_k(t)) e^{kt}
ExpPoly differentiate(const ExpPoly& f);

/// Floating evaluation at `t`. Throws std::overflow_error when e^{kt} leaves
/// the representable range.
Real eval(const ExpPoly& f, const Real& t);
double eval(const ExpPoly& f, double t);

/// f^{(n)}(0+) by n exact differentiations.
Rational derivative_limit_at_zero(const ExpPoly& f, unsigned n);

/// Maclaurin coefficients c_0..c_{count-1}, by convolving each p_k with the
/// series of e^{kt}.
std::vector<Rational> taylor_coeffs(const ExpPoly& f, std::size_t count);

/// Text that parse_expoly() reads back to the same ExpPoly.
std::string render(const Poly& p);
std::string render(const ExpPoly& f);

}  // namespace burnside
