// Dense univariate polynomials with exact rational coefficients.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dani {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Coefficients as integers over one common (lcm) denominator.
struct IntegerForm {
  std::vector<mpz_class> num;
  mpz_class den;
};
IntegerForm integer_form(std::span<const Rational> c);
/// num[i] / den, canonicalized.
std::vector<Rational> from_integer_form(const std::vector<mpz_class>& num, const mpz_class& den);

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Polynomial in one variable, coefficient i belongs to t^i.  The coefficient
/// vector never carries trailing zeros, so the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  static RatPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  RatPoly derivative() const;
  /// Antiderivative with zero constant term.
  RatPoly integral() const;
  Rational evaluate(const Rational& t) const;
  /// this(inner(t)).
  RatPoly compose(const RatPoly& inner) const;
  RatPoly pow(unsigned e) const;
  RatPoly monic() const;
  /// t^k * this
  RatPoly shift(int k) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// a / b when b divides a exactly.
std::optional<RatPoly> exact_div(const RatPoly& a, const RatPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

struct BezoutCertificate {
  RatPoly u;  // coefficient of a
  RatPoly v;  // coefficient of b
  RatPoly g;  // monic gcd
};

/// u*a + v*b = g with deg u < deg b - deg g and deg v < deg a - deg g.
BezoutCertificate extended_gcd(const RatPoly& a, const RatPoly& b);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const RatPoly& f);

/// Human readable form, e.g. "3*z^2 - 1".
std::string to_string(const RatPoly& f, std::string_view var = "z");

}  // namespace dani
