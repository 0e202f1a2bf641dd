// Coordinate ring of the surface xy = p(z) over the rationals.
//
// Every regular function has a unique expansion f = sum_i a_i(z) x^i over
// i in Z, where y has been replaced by p(z)/x.  A coefficient at a negative
// index -m is always divisible by p^m; that divisibility is exactly the
// condition for the Laurent expression to be regular on the surface.
#pragma once

#include <array>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "dani/ratpoly.hpp"

namespace dani {

/// Defining polynomial p of a smooth surface: deg p >= 2 and no repeated roots.
class SurfaceSpec {
 public:
  /// Throws std::invalid_argument unless deg p >= 2 and gcd(p, p') = 1.
  explicit SurfaceSpec(RatPoly p);

  const RatPoly& p() const { return d_->p; }
  const RatPoly& dp() const { return d_->dp; }
  const RatPoly& ddp() const { return d_->ddp; }
  int degree() const { return d_->p.degree(); }
  /// u*p + v*p' = 1.
  const BezoutCertificate& bezout() const { return d_->bezout; }
  /// p^m, cached; the reference stays valid for the lifetime of the spec.
  const RatPoly& p_power(int m) const;

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) {
    return a.d_ == b.d_ || a.d_->p == b.d_->p;
  }

 private:
  struct Data {
    RatPoly p, dp, ddp;
    BezoutCertificate bezout;
    mutable std::mutex mu;
    mutable std::deque<RatPoly> powers;
  };
  std::shared_ptr<const Data> d_;
};

/// Throws std::invalid_argument("mismatched surface specs") unless a == b.
void require_same(const SurfaceSpec& a, const SurfaceSpec& b);

class SurfacePoly {
 public:
  using Terms = std::map<int, RatPoly>;

  explicit SurfacePoly(SurfaceSpec spec) : spec_(std::move(spec)) {}
  /// Validates the divisibility invariant; zero coefficients are dropped.
  SurfacePoly(SurfaceSpec spec, Terms terms);

  static SurfacePoly constant(const SurfaceSpec& s, const Rational& c);
  static SurfacePoly from_z(const SurfaceSpec& s, const RatPoly& a, int x_index = 0);
  static SurfacePoly x(const SurfaceSpec& s) { return from_z(s, RatPoly::constant(1), 1); }
  static SurfacePoly y(const SurfaceSpec& s) { return from_z(s, s.p(), -1); }
  static SurfacePoly z(const SurfaceSpec& s) { return from_z(s, RatPoly::variable()); }

  const SurfaceSpec& spec() const { return spec_; }
  const Terms& terms() const { return terms_; }
  const RatPoly& coeff(int i) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Drops the constant term (functions are often only defined modulo C).
  SurfacePoly without_constant() const;
  /// (min, max) index with nonzero coefficient; std::domain_error on zero.
  std::pair<int, int> bidegree() const;

  /// g with x^m * g = *this, if g is regular.
  std::optional<SurfacePoly> exact_div_x(int m) const;
  /// g with d(z) * g = *this, if g is regular.
  std::optional<SurfacePoly> exact_div_z(const RatPoly& d) const;

  /// Checks the divisibility invariant and the absence of zero coefficients.
  bool is_valid() const;

  SurfacePoly& operator+=(const SurfacePoly& o);
  SurfacePoly& operator-=(const SurfacePoly& o);
  SurfacePoly& operator*=(const Rational& c);
  SurfacePoly& operator*=(const RatPoly& zpoly);

  friend SurfacePoly operator+(SurfacePoly a, const SurfacePoly& b) { return a += b; }
  friend SurfacePoly operator-(SurfacePoly a, const SurfacePoly& b) { return a -= b; }
  friend SurfacePoly operator-(SurfacePoly a) { return a *= Rational(-1); }
  friend SurfacePoly operator*(const SurfacePoly& a, const SurfacePoly& b);
  friend SurfacePoly operator*(SurfacePoly a, const Rational& c) { return a *= c; }
  friend SurfacePoly operator*(const Rational& c, SurfacePoly a) { return a *= c; }
  friend SurfacePoly operator*(const RatPoly& h, SurfacePoly a) { return a *= h; }
  friend bool operator==(const SurfacePoly& a, const SurfacePoly& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }

 private:
  SurfaceSpec spec_;
  Terms terms_;
};

/// h(f) for a univariate h.
SurfacePoly evaluate(const RatPoly& h, const SurfacePoly& f);
/// f^e.
SurfacePoly pow(const SurfacePoly& f, unsigned e);

/// Arbitrary polynomial in x, y, z: (x exponent, y exponent) -> coefficient in z.
class AmbientPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, RatPoly>;

  AmbientPoly() = default;
  explicit AmbientPoly(Terms terms);

  static AmbientPoly constant(const Rational& c);
  static AmbientPoly monomial(const RatPoly& zcoeff, int xexp, int yexp);
  static AmbientPoly x() { return monomial(RatPoly::constant(1), 1, 0); }
  static AmbientPoly y() { return monomial(RatPoly::constant(1), 0, 1); }
  static AmbientPoly z() { return monomial(RatPoly::variable(), 0, 0); }
  /// xy - p(z).
  static AmbientPoly relation(const SurfaceSpec& s);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;

  AmbientPoly partial_x() const;
  AmbientPoly partial_y() const;
  AmbientPoly partial_z() const;
  AmbientPoly pow(unsigned e) const;

  AmbientPoly& operator+=(const AmbientPoly& o);
  AmbientPoly& operator-=(const AmbientPoly& o);
  AmbientPoly& operator*=(const Rational& c);

  friend AmbientPoly operator+(AmbientPoly a, const AmbientPoly& b) { return a += b; }
  friend AmbientPoly operator-(AmbientPoly a, const AmbientPoly& b) { return a -= b; }
  friend AmbientPoly operator-(AmbientPoly a) { return a *= Rational(-1); }
  friend AmbientPoly operator*(const AmbientPoly& a, const AmbientPoly& b);
  friend AmbientPoly operator*(AmbientPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const AmbientPoly& a, const AmbientPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Key& k, const RatPoly& c);
  Terms terms_;
};

/// Lift with no mixed monomials: sum x^i a_i(z) + sum y^m b_m(z) + c(z), i, m >= 1.
struct AmbientLift {
  std::map<int, RatPoly> x_part;
  std::map<int, RatPoly> y_part;
  RatPoly z_part;

  AmbientPoly to_ambient() const;
  SurfacePoly to_surface(const SurfaceSpec& s) const;
  friend bool operator==(const AmbientLift&, const AmbientLift&) = default;
};

/// Unique standard lift: x^{-m} a(z) becomes y^m a(z)/p(z)^m.
AmbientLift lift(const SurfacePoly& f);

/// Replaces xy by p(z).
SurfacePoly canonicalize(const SurfaceSpec& s, const AmbientPoly& raw);

/// raw = quotient * (xy - p(z)) + remainder, remainder without mixed monomials.
struct RelationDivision {
  AmbientPoly quotient;
  AmbientLift remainder;
};
RelationDivision divide_by_relation(const SurfaceSpec& s, const AmbientPoly& raw);

/// Partial derivatives (x, y, z) of the standard lift.
std::array<AmbientLift, 3> partials(const SurfacePoly& f);

/// Images in the ring of the partial derivatives of a lift.
struct Gradient {
  SurfacePoly dx, dy, dz;
};
Gradient gradient(const SurfacePoly& f);
Gradient gradient(const SurfaceSpec& s, const AmbientPoly& lift);

/// p'(f_y g_x - f_x g_y) + x(f_z g_x - f_x g_z) - y(f_z g_y - f_y g_z); this is
/// the Jacobian determinant of (xy - p, f, g), so it does not see the lift.
SurfacePoly bracket(const SurfacePoly& f, const SurfacePoly& g);
SurfacePoly bracket(const SurfaceSpec& s, const Gradient& f, const Gradient& g);
SurfacePoly bracket_of_lifts(const SurfaceSpec& s, const AmbientPoly& f, const AmbientPoly& g);

}  // namespace dani
