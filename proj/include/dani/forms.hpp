// Kaehler differentials on the surface.
//
// A 1-form is stored through its values on the generators nu_x, nu_y, nu_z.
// Those values are unique (the generators span all vector fields), whereas
// u dx + v dy + w dz is only defined up to multiples of
// d(xy - p) = y dx + x dy - p'(z) dz.  2-forms are multiples of the volume
// form omega = (1/x) dx ^ dz.
#pragma once

#include "dani/fields.hpp"

namespace dani {

class OneForm {
 public:
  /// Throws std::invalid_argument unless x*on_y - y*on_x = p'*on_z.
  OneForm(SurfacePoly on_x, SurfacePoly on_y, SurfacePoly on_z);
  static OneForm zero(const SurfaceSpec& s);
  /// u dx + v dy + w dz.
  static OneForm from_differentials(const SurfacePoly& u, const SurfacePoly& v, const SurfacePoly& w);

  const SurfaceSpec& spec() const { return on_x_.spec(); }
  const SurfacePoly& on_x() const { return on_x_; }
  const SurfacePoly& on_y() const { return on_y_; }
  const SurfacePoly& on_z() const { return on_z_; }

  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const SurfacePoly& h, const OneForm& f);
  friend bool operator==(const OneForm&, const OneForm&) = default;

 private:
  SurfacePoly on_x_, on_y_, on_z_;
};

/// Coefficient h of h * omega.
class TwoForm {
 public:
  explicit TwoForm(SurfacePoly h) : h_(std::move(h)) {}
  static TwoForm volume(const SurfaceSpec& s) { return TwoForm(SurfacePoly::constant(s, 1)); }
  const SurfacePoly& coefficient() const { return h_; }
  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  SurfacePoly h_;
};

/// u dx + v dy + w dz representing a 1-form.
struct DifferentialLift {
  SurfacePoly u, v, w;
};

/// One representative, built from s p + t p' = 1.
DifferentialLift representative(const OneForm& eta);

OneForm d0(const SurfacePoly& f);
/// Exterior derivative of u dx + v dy + w dz.
TwoForm d1(const DifferentialLift& lift);
TwoForm d1(const OneForm& eta);

/// eta(theta).
SurfacePoly pair(const OneForm& eta, const VectorField& theta);
/// omega(t1, t2) = (a1 c2 - c1 a2) / x.
SurfacePoly volume_pairing(const VectorField& t1, const VectorField& t2);
/// The same value computed as (a1 b2 - b1 a2) / p'(z), an independent route.
SurfacePoly volume_pairing_via_dxdy(const VectorField& t1, const VectorField& t2);

OneForm contract_two(const VectorField& theta, const TwoForm& form);
OneForm lie_derivative(const VectorField& theta, const OneForm& eta);
/// L_theta(h omega) = d(i_theta(h omega)).
TwoForm lie_derivative(const VectorField& theta, const TwoForm& form);

}  // namespace dani
