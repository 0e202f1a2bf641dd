#include "dani/fields.hpp"

#include <stdexcept>

namespace dani {

SurfacePoly tangency_defect(const SurfacePoly& a, const SurfacePoly& b, const SurfacePoly& c) {
  const auto& s = a.spec();
  return a * SurfacePoly::y(s) + b * SurfacePoly::x(s) - s.dp() * c;
}

VectorField::VectorField(SurfacePoly a, SurfacePoly b, SurfacePoly c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  require_same(a_.spec(), b_.spec());
  require_same(a_.spec(), c_.spec());
  if (!tangency_defect(a_, b_, c_).is_zero()) {
    throw std::invalid_argument("coefficients violate a*y + b*x - c*p'(z) = 0");
  }
}

VectorField VectorField::zero(const SurfaceSpec& s) {
  return VectorField(SurfacePoly(s), SurfacePoly(s), SurfacePoly(s));
}

VectorField& VectorField::operator+=(const VectorField& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  return *this;
}

VectorField operator*(const SurfacePoly& h, const VectorField& v) {
  return VectorField(h * v.a_, h * v.b_, h * v.c_);
}

VectorField operator*(const Rational& h, const VectorField& v) {
  return VectorField(h * v.a_, h * v.b_, h * v.c_);
}

Generators generators(const SurfaceSpec& s) {
  const SurfacePoly zero(s);
  const SurfacePoly dp = SurfacePoly::from_z(s, s.dp());
  const SurfacePoly x = SurfacePoly::x(s);
  const SurfacePoly y = SurfacePoly::y(s);
  return {VectorField(zero, dp, x), VectorField(dp, zero, y), VectorField(x, -y, zero)};
}

SurfacePoly apply(const VectorField& v, const SurfacePoly& f) {
  require_same(v.spec(), f.spec());
  // Tangency makes the result independent of the lift of f.
  const Gradient g = gradient(f);
  return v.a() * g.dx + v.b() * g.dy + v.c() * g.dz;
}

VectorField lie_bracket(const VectorField& u, const VectorField& v) {
  require_same(u.spec(), v.spec());
  return VectorField(apply(u, v.a()) - apply(v, u.a()), apply(u, v.b()) - apply(v, u.b()),
                     apply(u, v.c()) - apply(v, u.c()));
}

SurfacePoly divergence_of_lifts(const SurfaceSpec& s, const AmbientPoly& a, const AmbientPoly& b,
                                const AmbientPoly& c) {
  const AmbientPoly defect = AmbientPoly::y() * a + AmbientPoly::x() * b -
                             AmbientPoly::monomial(s.dp(), 0, 0) * c;
  auto [lambda, rem] = divide_by_relation(s, defect);
  if (!rem.to_ambient().is_zero()) {
    throw std::invalid_argument("lifted coefficients do not define a tangent field");
  }
  return canonicalize(s, a.partial_x() + b.partial_y() + c.partial_z() - lambda);
}

SurfacePoly divergence(const VectorField& v) {
  return divergence_of_lifts(v.spec(), lift(v.a()).to_ambient(), lift(v.b()).to_ambient(),
                             lift(v.c()).to_ambient());
}

VectorField field_from_function(const SurfacePoly& f) {
  const auto& s = f.spec();
  const Gradient g = gradient(f);
  return VectorField(bracket(s, g, gradient(SurfacePoly::x(s))), bracket(s, g, gradient(SurfacePoly::y(s))),
                     bracket(s, g, gradient(SurfacePoly::z(s))));
}

SurfacePoly function_from_field(const VectorField& v) {
  if (!divergence(v).is_zero()) throw std::invalid_argument("not divergence-free");
  // For f = sum a_i x^i:  nu_f(x) = sum a_i' x^{i+1}  and  nu_f(z) = -sum i a_i x^i.
  const auto& s = v.spec();
  SurfacePoly::Terms t;
  for (const auto& [i, c] : v.c().terms()) {
    if (i != 0) t.emplace(i, c * Rational(Rational(-1) / i));
  }
  RatPoly a0 = v.a().coeff(1).integral();
  if (!a0.is_zero()) t.emplace(0, std::move(a0));
  SurfacePoly f(s, std::move(t));
  if (!(field_from_function(f) == v)) {
    throw std::logic_error("function_from_field: reconstruction mismatch on a divergence-free field");
  }
  return f;
}

bool Ve0Decomposition::in_lnd() const {
  for (const auto& c : torus_coeffs) {
    if (c != 0) return false;
  }
  return true;
}

SurfacePoly Ve0Decomposition::lnd_function(const SurfaceSpec& s) const {
  AmbientLift l;
  l.x_part = x_part;
  l.y_part = y_part;
  l.z_part = (s.p() * r).derivative();
  return l.to_surface(s).without_constant();
}

SurfacePoly Ve0Decomposition::torus_function(const SurfaceSpec& s) const {
  std::vector<Rational> coeffs(torus_coeffs.size() + 1);
  for (std::size_t k = 0; k < torus_coeffs.size(); ++k) {
    coeffs[k + 1] = torus_coeffs[k] / Rational(static_cast<long>(k + 1));
  }
  return SurfacePoly::from_z(s, RatPoly(std::move(coeffs)));
}

SurfacePoly Ve0Decomposition::reconstruct(const SurfaceSpec& s) const {
  return lnd_function(s) + torus_function(s);
}

Ve0Decomposition decompose_function(const SurfacePoly& f) {
  const auto& s = f.spec();
  const int n = s.degree();
  AmbientLift l = lift(f);
  Ve0Decomposition d;
  d.x_part = std::move(l.x_part);
  d.y_part = std::move(l.y_part);
  // (p z^j)' has degree n-1+j and leading coefficient (n+j) lc(p), so it
  // reaches every degree >= n-1; degrees 1 .. n-2 are left to the torus part.
  RatPoly g = l.z_part;
  std::vector<Rational> r(static_cast<std::size_t>(std::max(0, g.degree() - (n - 1) + 1)));
  for (int deg = g.degree(); deg >= n - 1; --deg) {
    const Rational& top = g.coeff(deg);
    if (top == 0) continue;
    const int j = deg - (n - 1);
    Rational rj = top / (Rational(n + j) * s.p().leading());
    r[static_cast<std::size_t>(j)] = rj;
    g -= (s.p() * RatPoly::monomial(rj, j)).derivative();
  }
  d.r = RatPoly(std::move(r));
  d.torus_coeffs.assign(static_cast<std::size_t>(std::max(0, n - 2)), Rational(0));
  for (int k = 0; k + 1 <= n - 2; ++k) {
    d.torus_coeffs[static_cast<std::size_t>(k)] = g.coeff(k + 1) * Rational(k + 1);
  }
  return d;
}

std::optional<Ve0Decomposition> lnd_membership(const SurfacePoly& f) {
  Ve0Decomposition d = decompose_function(f);
  if (!d.in_lnd()) return std::nullopt;
  return d;
}

Ve0Decomposition decompose_ve0(const VectorField& v) { return decompose_function(function_from_field(v)); }

std::optional<int> nilpotency_index(const VectorField& v, const SurfacePoly& f, int bound) {
  if (bound < 1) throw std::invalid_argument("nilpotency bound must be >= 1");
  if (f.is_zero()) return 0;
  SurfacePoly g = f;
  for (int k = 1; k <= bound; ++k) {
    g = apply(v, g);
    if (g.is_zero()) return k;
  }
  return std::nullopt;
}

VectorField unipotent_field(const SurfaceSpec& s, Side side, const RatPoly& f) {
  if (f.coeff(0) != 0) throw std::invalid_argument("translation polynomial must satisfy f(0) = 0");
  // f(t)/t and f(t) as functions of x (side X) or y (side Y); y^k = p^k x^{-k}.
  SurfacePoly::Terms quotient, full;
  for (int k = 1; k <= f.degree(); ++k) {
    const Rational& c = f.coeff(k);
    if (c == 0) continue;
    if (side == Side::X) {
      quotient.emplace(k - 1, RatPoly::constant(c));
      full.emplace(k, RatPoly::constant(c));
    } else {
      quotient.emplace(1 - k, c * s.p_power(k - 1));
      full.emplace(-k, c * s.p_power(k));
    }
  }
  const SurfacePoly zero(s);
  SurfacePoly weighted = s.dp() * SurfacePoly(s, std::move(quotient));
  SurfacePoly translation(s, std::move(full));
  if (side == Side::X) return VectorField(zero, std::move(weighted), std::move(translation));
  return VectorField(std::move(weighted), zero, std::move(translation));
}

}  // namespace dani
