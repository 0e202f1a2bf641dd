#include "dani/forms.hpp"

#include <stdexcept>

namespace dani {

OneForm::OneForm(SurfacePoly on_x, SurfacePoly on_y, SurfacePoly on_z)
    : on_x_(std::move(on_x)), on_y_(std::move(on_y)), on_z_(std::move(on_z)) {
  const auto& s = on_x_.spec();
  require_same(s, on_y_.spec());
  require_same(s, on_z_.spec());
  const SurfacePoly defect = SurfacePoly::x(s) * on_y_ - SurfacePoly::y(s) * on_x_ - s.dp() * on_z_;
  if (!defect.is_zero()) throw std::invalid_argument("1-form pairings violate x*on_y - y*on_x = p'*on_z");
}

OneForm OneForm::zero(const SurfaceSpec& s) { return OneForm(SurfacePoly(s), SurfacePoly(s), SurfacePoly(s)); }

OneForm OneForm::from_differentials(const SurfacePoly& u, const SurfacePoly& v, const SurfacePoly& w) {
  const auto& s = u.spec();
  const auto g = generators(s);
  auto eval = [&](const VectorField& t) { return u * t.a() + v * t.b() + w * t.c(); };
  return OneForm(eval(g.nu_x), eval(g.nu_y), eval(g.nu_z));
}

OneForm& OneForm::operator+=(const OneForm& o) {
  on_x_ += o.on_x_;
  on_y_ += o.on_y_;
  on_z_ += o.on_z_;
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  on_x_ -= o.on_x_;
  on_y_ -= o.on_y_;
  on_z_ -= o.on_z_;
  return *this;
}

OneForm operator*(const SurfacePoly& h, const OneForm& f) {
  return OneForm(h * f.on_x_, h * f.on_y_, h * f.on_z_);
}

DifferentialLift representative(const OneForm& eta) {
  // With s p + t p' = 1 and P_* the generator pairings:
  //   u = t P_y + s y P_z / 2,  v = t P_x - s x P_z / 2,  w = s (y P_x + x P_y) / 2.
  const auto& sp = eta.spec();
  const RatPoly& s = sp.bezout().u;
  const RatPoly& t = sp.bezout().v;
  const RatPoly half_s = s * Rational(1, 2);
  const SurfacePoly x = SurfacePoly::x(sp);
  const SurfacePoly y = SurfacePoly::y(sp);
  SurfacePoly u = t * eta.on_y() + half_s * (y * eta.on_z());
  SurfacePoly v = t * eta.on_x() - half_s * (x * eta.on_z());
  SurfacePoly w = half_s * (y * eta.on_x() + x * eta.on_y());
  return {std::move(u), std::move(v), std::move(w)};
}

OneForm d0(const SurfacePoly& f) {
  const auto g = generators(f.spec());
  return OneForm(apply(g.nu_x, f), apply(g.nu_y, f), apply(g.nu_z, f));
}

TwoForm d1(const DifferentialLift& l) {
  // dx^dy = p' omega, dx^dz = x omega, dy^dz = -y omega.
  const auto& s = l.u.spec();
  const Gradient gu = gradient(l.u);
  const Gradient gv = gradient(l.v);
  const Gradient gw = gradient(l.w);
  SurfacePoly h = s.dp() * (gv.dx - gu.dy);
  h += SurfacePoly::x(s) * (gw.dx - gu.dz);
  h -= SurfacePoly::y(s) * (gw.dy - gv.dz);
  return TwoForm(std::move(h));
}

TwoForm d1(const OneForm& eta) { return d1(representative(eta)); }

SurfacePoly pair(const OneForm& eta, const VectorField& theta) {
  require_same(eta.spec(), theta.spec());
  const DifferentialLift l = representative(eta);
  return l.u * theta.a() + l.v * theta.b() + l.w * theta.c();
}

SurfacePoly volume_pairing(const VectorField& t1, const VectorField& t2) {
  require_same(t1.spec(), t2.spec());
  auto q = (t1.a() * t2.c() - t1.c() * t2.a()).exact_div_x(1);
  if (!q) throw std::logic_error("division failure: dx^dz(t1, t2) is not divisible by x");
  return *q;
}

SurfacePoly volume_pairing_via_dxdy(const VectorField& t1, const VectorField& t2) {
  require_same(t1.spec(), t2.spec());
  auto q = (t1.a() * t2.b() - t1.b() * t2.a()).exact_div_z(t1.spec().dp());
  if (!q) throw std::logic_error("division failure: dx^dy(t1, t2) is not divisible by p'");
  return *q;
}

OneForm contract_two(const VectorField& theta, const TwoForm& form) {
  require_same(theta.spec(), form.coefficient().spec());
  const auto g = generators(theta.spec());
  const SurfacePoly& h = form.coefficient();
  return OneForm(h * volume_pairing(theta, g.nu_x), h * volume_pairing(theta, g.nu_y),
                 h * volume_pairing(theta, g.nu_z));
}

OneForm lie_derivative(const VectorField& theta, const OneForm& eta) {
  return d0(pair(eta, theta)) + contract_two(theta, d1(eta));
}

TwoForm lie_derivative(const VectorField& theta, const TwoForm& form) {
  return d1(contract_two(theta, form));
}

}  // namespace dani
