// The neutral component of the automorphism group, (U_x * U_y) x| T, and
// affine isomorphisms between two surfaces.
//
// An element is stored as l_1 o l_2 o ... o l_N o tau_t: a reduced word in
// the free product of the two families of additive actions followed (on
// points: preceded) by a torus element tau_t(x, y, z) = (t x, y / t, z).
//
//   X letter with polynomial a:  (x, y, z) -> (x, p(z + x a(x)) / x, z + x a(x))
//   Y letter with polynomial a:  (x, y, z) -> (p(z + y a(y)) / y, y, z + y a(y))
#pragma once

#include <array>
#include <vector>

#include "dani/fields.hpp"

namespace dani {

struct UnipotentLetter {
  Side side;
  RatPoly a;  // nonzero; the letter translates z by t * a(t)
  friend bool operator==(const UnipotentLetter&, const UnipotentLetter&) = default;
};

struct SurfacePoint {
  Rational x, y, z;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

bool on_surface(const SurfaceSpec& s, const SurfacePoint& pt);

class AutElement {
 public:
  /// The identity.
  explicit AutElement(SurfaceSpec s);
  /// Reduces the word: merges adjacent letters of the same side, drops zero letters.
  AutElement(SurfaceSpec s, std::vector<UnipotentLetter> word, Rational torus);

  static AutElement letter(const SurfaceSpec& s, Side side, const RatPoly& a);
  static AutElement torus_element(const SurfaceSpec& s, const Rational& t);

  const SurfaceSpec& spec() const { return spec_; }
  const std::vector<UnipotentLetter>& word() const { return word_; }
  const Rational& torus() const { return torus_; }
  bool is_identity() const { return word_.empty() && torus_ == 1; }

  friend bool operator==(const AutElement&, const AutElement&) = default;

 private:
  SurfaceSpec spec_;
  std::vector<UnipotentLetter> word_;
  Rational torus_ = 1;
};

/// g1 o g2 (g2 acts on points first).
AutElement compose(const AutElement& g1, const AutElement& g2);
AutElement inverse(const AutElement& g);

/// f o g.  pullback(compose(g1, g2), f) = pullback(g2, pullback(g1, f)).
SurfacePoly pullback(const AutElement& g, const SurfacePoly& f);

/// Throws std::invalid_argument for points off the surface.
SurfacePoint apply_point(const AutElement& g, const SurfacePoint& pt);

/// (g*)^{-1} o theta o g*.
VectorField ad(const AutElement& g, const VectorField& theta);

struct Components {
  SurfacePoly u, v, w;  // pullbacks of x, y, z
};
Components components(const AutElement& g);
std::array<std::pair<int, int>, 3> component_bidegrees(const AutElement& g);

/// k with g* omega = k omega; equal to 1 on this group.
Rational jacobian_factor(const AutElement& g);

/// f(u, v, w) with u, v, w replaced by functions on another surface.
/// Requires u * v = p_f(w) there, p_f being the polynomial of f's surface.
SurfacePoly substitute(const SurfacePoly& f, const Components& images);

/// k with (components)* omega_target = k omega_source.
Rational jacobian_factor(const Components& images);

/// Isomorphism from the surface of p to the surface of q with
/// c a^2 q(w) = p(a w + b):
///   (x, y, z) -> (x / a, y / (a c), (z - b) / a),
/// followed by (u, v, w) -> (v, u, w) when swap is set.
class AffineIso {
 public:
  /// Throws std::invalid_argument if a = 0, c = 0 or the identity fails.
  AffineIso(SurfaceSpec source, SurfaceSpec target, Rational a, Rational b, Rational c, bool swap);

  const SurfaceSpec& source() const { return source_; }
  const SurfaceSpec& target() const { return target_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  bool swap() const { return swap_; }

 private:
  SurfaceSpec source_, target_;
  Rational a_, b_, c_;
  bool swap_;
};

/// True when c a^2 q(w) = p(a w + b) holds identically.
bool affine_identity_holds(const RatPoly& p, const RatPoly& q, const Rational& a, const Rational& b,
                           const Rational& c);

/// f o psi: function on the target -> function on the source.
SurfacePoly iso_pullback(const AffineIso& psi, const SurfacePoly& f);
/// f o psi^{-1}: function on the source -> function on the target.
SurfacePoly iso_pushforward(const AffineIso& psi, const SurfacePoly& f);
/// Field on the source -> field on the target.
VectorField ad_iso(const AffineIso& psi, const VectorField& theta);
/// k(psi) with psi* omega_q = k(psi) omega_p; equals 1/a, negated under swap.
Rational jacobian_factor_iso(const AffineIso& psi);
SurfacePoint apply_point(const AffineIso& psi, const SurfacePoint& pt);

}  // namespace dani
