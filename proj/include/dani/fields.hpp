// Vector fields on the surface as derivations of the coordinate ring.
//
// Sign convention: the field of a function f is nu_f(g) := bracket(f, g).
// With it nu_{-x} = nu_x, nu_y = nu_y and nu_z = nu_z for the generators
// below, and more generally nu_{-h(x)} = h'(x) nu_x, nu_{h(y)} = h'(y) nu_y,
// nu_{h(z)} = h'(z) nu_z.
#pragma once

#include <optional>
#include <vector>

#include "dani/ring.hpp"

namespace dani {

/// a d/dx + b d/dy + c d/dz with a*y + b*x - c*p'(z) = 0 on the surface.
class VectorField {
 public:
  /// Throws std::invalid_argument if the tangency relation fails.
  VectorField(SurfacePoly a, SurfacePoly b, SurfacePoly c);
  static VectorField zero(const SurfaceSpec& s);

  const SurfaceSpec& spec() const { return a_.spec(); }
  const SurfacePoly& a() const { return a_; }
  const SurfacePoly& b() const { return b_; }
  const SurfacePoly& c() const { return c_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField u, const VectorField& v) { return u += v; }
  friend VectorField operator-(VectorField u, const VectorField& v) { return u -= v; }
  friend VectorField operator*(const SurfacePoly& h, const VectorField& v);
  friend VectorField operator*(const Rational& h, const VectorField& v);
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  SurfacePoly a_, b_, c_;
};

/// a*y + b*x - c*p'; zero exactly for tangent fields.
SurfacePoly tangency_defect(const SurfacePoly& a, const SurfacePoly& b, const SurfacePoly& c);

struct Generators {
  VectorField nu_x;  // (0, p', x)
  VectorField nu_y;  // (p', 0, y)
  VectorField nu_z;  // (x, -y, 0)
};
Generators generators(const SurfaceSpec& s);

SurfacePoly apply(const VectorField& v, const SurfacePoly& f);
VectorField lie_bracket(const VectorField& u, const VectorField& v);

/// Divergence with respect to the volume form (1/x) dx ^ dz.
///
/// Computed on standard lifts A, B, C as A_x + B_y + C_z - lambda, where
/// yA + xB - p'C = lambda (xy - p).  The lambda term vanishes when the lifts
/// already satisfy the tangency relation identically and makes the result
/// independent of the chosen lifts.
SurfacePoly divergence(const VectorField& v);
SurfacePoly divergence_of_lifts(const SurfaceSpec& s, const AmbientPoly& a, const AmbientPoly& b,
                                const AmbientPoly& c);

VectorField field_from_function(const SurfacePoly& f);

/// Inverse of field_from_function modulo constants (constant term is 0).
/// Throws std::invalid_argument("not divergence-free") if div v != 0.
SurfacePoly function_from_field(const VectorField& v);

/// Split of a function f (mod constants) as
///   sum a_i(z) x^i + sum b_m(z) y^m + (p r)'(z) + sum_k c_k z^{k+1}/(k+1),
/// k = 0 .. deg p - 3.  The first three parts form the span of Lie
/// combinations of locally nilpotent fields; the c_k are the torus directions
/// z^k (x d/dx - y d/dy).
struct Ve0Decomposition {
  std::map<int, RatPoly> x_part;
  std::map<int, RatPoly> y_part;
  RatPoly r;
  std::vector<Rational> torus_coeffs;

  bool in_lnd() const;
  SurfacePoly lnd_function(const SurfaceSpec& s) const;
  SurfacePoly torus_function(const SurfaceSpec& s) const;
  /// lnd_function + torus_function.
  SurfacePoly reconstruct(const SurfaceSpec& s) const;
};

Ve0Decomposition decompose_function(const SurfacePoly& f);
/// The decomposition when every torus coefficient vanishes, else nullopt.
std::optional<Ve0Decomposition> lnd_membership(const SurfacePoly& f);
/// function_from_field followed by decompose_function.
Ve0Decomposition decompose_ve0(const VectorField& v);

/// Least k <= bound with v^k(f) = 0.
std::optional<int> nilpotency_index(const VectorField& v, const SurfacePoly& f, int bound);

enum class Side { X, Y };

/// Field of the additive action translating z by f(x) (side X) or f(y) (side Y).
/// Throws std::invalid_argument unless f(0) = 0.
VectorField unipotent_field(const SurfaceSpec& s, Side side, const RatPoly& f);

}  // namespace dani
