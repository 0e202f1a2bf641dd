#include "dani/autgroup.hpp"

#include <stdexcept>

namespace dani {

bool on_surface(const SurfaceSpec& s, const SurfacePoint& pt) { return pt.x * pt.y == s.p().evaluate(pt.z); }

namespace {

// a(s/t)/t for X letters, t a(t s) for Y letters: tau_t l tau_t^{-1}.
UnipotentLetter conjugate_by_torus(const UnipotentLetter& l, const Rational& t) {
  std::vector<Rational> c(l.a.coefficients().begin(), l.a.coefficients().end());
  Rational scale = (l.side == Side::X) ? Rational(1 / t) : t;
  Rational factor = scale;  // X: t^{-(k+1)}, Y: t^{k+1}
  for (auto& ck : c) {
    ck *= factor;
    factor *= scale;
  }
  return {l.side, RatPoly(std::move(c))};
}

std::vector<UnipotentLetter> reduce(const std::vector<UnipotentLetter>& word) {
  std::vector<UnipotentLetter> out;
  for (const auto& l : word) {
    if (l.a.is_zero()) continue;
    if (!out.empty() && out.back().side == l.side) {
      out.back().a += l.a;
      if (out.back().a.is_zero()) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// g with y g = f, if g is regular.
std::optional<SurfacePoly> exact_div_y(const SurfacePoly& f) {
  const auto& s = f.spec();
  SurfacePoly::Terms t;
  for (const auto& [i, c] : f.terms()) {
    auto q = exact_div(c, s.p());
    if (!q) return std::nullopt;
    int j = i + 1;
    if (j < 0 && !exact_div(*q, s.p_power(-j))) return std::nullopt;
    t.emplace(j, std::move(*q));
  }
  return SurfacePoly(s, std::move(t));
}

// Images of x, y, z under the pullback of a single letter.
Components letter_images(const SurfaceSpec& s, const UnipotentLetter& l) {
  const SurfacePoly x = SurfacePoly::x(s);
  const SurfacePoly y = SurfacePoly::y(s);
  const SurfacePoly& base = (l.side == Side::X) ? x : y;
  SurfacePoly shift = base * evaluate(l.a, base);
  SurfacePoly w = SurfacePoly::z(s) + shift;
  SurfacePoly pw = evaluate(s.p(), w);
  if (l.side == Side::X) {
    auto v = pw.exact_div_x(1);
    if (!v) throw std::logic_error("p(z + x a(x)) not divisible by x");
    return {x, std::move(*v), std::move(w)};
  }
  auto u = exact_div_y(pw);
  if (!u) throw std::logic_error("p(z + y a(y)) not divisible by y");
  return {std::move(*u), y, std::move(w)};
}

Components torus_images(const SurfaceSpec& s, const Rational& t) {
  return {t * SurfacePoly::x(s), Rational(1 / t) * SurfacePoly::y(s), SurfacePoly::z(s)};
}

}  // namespace

AutElement::AutElement(SurfaceSpec s) : spec_(std::move(s)) {}

AutElement::AutElement(SurfaceSpec s, std::vector<UnipotentLetter> word, Rational torus)
    : spec_(std::move(s)), word_(reduce(word)), torus_(std::move(torus)) {
  if (torus_ == 0) throw std::invalid_argument("torus scalar must be nonzero");
}

AutElement AutElement::letter(const SurfaceSpec& s, Side side, const RatPoly& a) {
  return AutElement(s, {UnipotentLetter{side, a}}, 1);
}

AutElement AutElement::torus_element(const SurfaceSpec& s, const Rational& t) { return AutElement(s, {}, t); }

AutElement compose(const AutElement& g1, const AutElement& g2) {
  require_same(g1.spec(), g2.spec());
  // w1 tau_t1 w2 tau_t2 = w1 (tau_t1 w2 tau_t1^{-1}) tau_{t1 t2}
  std::vector<UnipotentLetter> word = g1.word();
  for (const auto& l : g2.word()) word.push_back(conjugate_by_torus(l, g1.torus()));
  return AutElement(g1.spec(), std::move(word), g1.torus() * g2.torus());
}

AutElement inverse(const AutElement& g) {
  // (w tau_t)^{-1} = tau_{1/t} w^{-1} = (tau_{1/t} w^{-1} tau_t) tau_{1/t}
  const Rational tinv = 1 / g.torus();
  std::vector<UnipotentLetter> word;
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
    word.push_back(conjugate_by_torus(UnipotentLetter{it->side, -it->a}, tinv));
  }
  return AutElement(g.spec(), std::move(word), tinv);
}

SurfacePoly substitute(const SurfacePoly& f, const Components& images) {
  const auto& target = images.u.spec();
  const AmbientLift l = lift(f);
  SurfacePoly result = evaluate(l.z_part, images.w);
  SurfacePoly power = SurfacePoly::constant(target, 1);
  int e = 0;
  for (const auto& [i, c] : l.x_part) {
    for (; e < i; ++e) power = power * images.u;
    result += evaluate(c, images.w) * power;
  }
  power = SurfacePoly::constant(target, 1);
  e = 0;
  for (const auto& [m, c] : l.y_part) {
    for (; e < m; ++e) power = power * images.v;
    result += evaluate(c, images.w) * power;
  }
  return result;
}

SurfacePoly pullback(const AutElement& g, const SurfacePoly& f) {
  require_same(g.spec(), f.spec());
  SurfacePoly r = f;
  for (const auto& l : g.word()) r = substitute(r, letter_images(g.spec(), l));
  if (g.torus() != 1) r = substitute(r, torus_images(g.spec(), g.torus()));
  return r;
}

SurfacePoint apply_point(const AutElement& g, const SurfacePoint& pt) {
  const auto& s = g.spec();
  if (!on_surface(s, pt)) throw std::invalid_argument("point is not on the surface");
  SurfacePoint q{g.torus() * pt.x, pt.y / g.torus(), pt.z};
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
    const bool x_side = it->side == Side::X;
    const Rational& base = x_side ? q.x : q.y;
    const Rational znew = q.z + base * it->a.evaluate(base);
    // (p(z + t a(t)) - p(z)) / t, with limit p'(z) a(0) at t = 0.
    Rational delta = (base == 0) ? Rational(s.dp().evaluate(q.z) * it->a.coeff(0))
                                 : Rational((s.p().evaluate(znew) - s.p().evaluate(q.z)) / base);
    (x_side ? q.y : q.x) += delta;
    q.z = znew;
  }
  return q;
}

Components components(const AutElement& g) {
  const auto& s = g.spec();
  return {pullback(g, SurfacePoly::x(s)), pullback(g, SurfacePoly::y(s)), pullback(g, SurfacePoly::z(s))};
}

std::array<std::pair<int, int>, 3> component_bidegrees(const AutElement& g) {
  const Components c = components(g);
  return {c.u.bidegree(), c.v.bidegree(), c.w.bidegree()};
}

VectorField ad(const AutElement& g, const VectorField& theta) {
  require_same(g.spec(), theta.spec());
  const auto& s = g.spec();
  const AutElement ginv = inverse(g);
  auto coeff = [&](const SurfacePoly& coord) { return pullback(ginv, apply(theta, pullback(g, coord))); };
  return VectorField(coeff(SurfacePoly::x(s)), coeff(SurfacePoly::y(s)), coeff(SurfacePoly::z(s)));
}

Rational jacobian_factor(const Components& images) {
  // (1/U) dU ^ dW = -{U, W}/U omega.
  const SurfacePoly num = -bracket(images.u, images.w);
  if (images.u.is_zero() || num.is_zero()) throw std::logic_error("degenerate map in jacobian_factor");
  const int top = images.u.bidegree().second;
  const Rational k = num.coeff(top).leading() / images.u.coeff(top).leading();
  if (!(num == k * images.u)) {
    throw std::logic_error("transported volume form is not a constant multiple of omega");
  }
  return k;
}

Rational jacobian_factor(const AutElement& g) {
  // (g1 o g2)* omega = g2* g1* omega, so the factors of the letters multiply;
  // transporting omega through the whole word at once costs the size of the
  // components, which grows like prod (n n_i - 1).
  Rational k = jacobian_factor(torus_images(g.spec(), g.torus()));
  for (const auto& l : g.word()) k *= jacobian_factor(letter_images(g.spec(), l));
  return k;
}

bool affine_identity_holds(const RatPoly& p, const RatPoly& q, const Rational& a, const Rational& b,
                           const Rational& c) {
  return q * (c * a * a) == p.compose(RatPoly{b, a});
}

AffineIso::AffineIso(SurfaceSpec source, SurfaceSpec target, Rational a, Rational b, Rational c, bool swap)
    : source_(std::move(source)), target_(std::move(target)), a_(std::move(a)), b_(std::move(b)),
      c_(std::move(c)), swap_(swap) {
  if (a_ == 0 || c_ == 0) throw std::invalid_argument("affine isomorphism needs a != 0 and c != 0");
  if (!affine_identity_holds(source_.p(), target_.p(), a_, b_, c_)) {
    throw std::invalid_argument("c a^2 q(w) = p(a w + b) fails for the given (a, b, c)");
  }
}

namespace {

Components forward_images(const AffineIso& psi) {
  const auto& s = psi.source();
  SurfacePoly u = Rational(1 / psi.a()) * SurfacePoly::x(s);
  SurfacePoly v = Rational(1 / (psi.a() * psi.c())) * SurfacePoly::y(s);
  SurfacePoly w = SurfacePoly::from_z(s, RatPoly{-psi.b() / psi.a(), 1 / psi.a()});
  if (psi.swap()) std::swap(u, v);
  return {std::move(u), std::move(v), std::move(w)};
}

Components backward_images(const AffineIso& psi) {
  const auto& t = psi.target();
  SurfacePoly x = psi.a() * SurfacePoly::x(t);
  SurfacePoly y = Rational(psi.a() * psi.c()) * SurfacePoly::y(t);
  SurfacePoly z = SurfacePoly::from_z(t, RatPoly{psi.b(), psi.a()});
  if (psi.swap()) {
    // x = a v, y = a c u
    x = psi.a() * SurfacePoly::y(t);
    y = Rational(psi.a() * psi.c()) * SurfacePoly::x(t);
  }
  return {std::move(x), std::move(y), std::move(z)};
}

}  // namespace

SurfacePoly iso_pullback(const AffineIso& psi, const SurfacePoly& f) {
  require_same(psi.target(), f.spec());
  return substitute(f, forward_images(psi));
}

SurfacePoly iso_pushforward(const AffineIso& psi, const SurfacePoly& f) {
  require_same(psi.source(), f.spec());
  return substitute(f, backward_images(psi));
}

VectorField ad_iso(const AffineIso& psi, const VectorField& theta) {
  require_same(psi.source(), theta.spec());
  const auto& t = psi.target();
  auto coeff = [&](const SurfacePoly& coord) {
    return iso_pushforward(psi, apply(theta, iso_pullback(psi, coord)));
  };
  return VectorField(coeff(SurfacePoly::x(t)), coeff(SurfacePoly::y(t)), coeff(SurfacePoly::z(t)));
}

Rational jacobian_factor_iso(const AffineIso& psi) { return jacobian_factor(forward_images(psi)); }

SurfacePoint apply_point(const AffineIso& psi, const SurfacePoint& pt) {
  if (!on_surface(psi.source(), pt)) throw std::invalid_argument("point is not on the source surface");
  SurfacePoint q{pt.x / psi.a(), pt.y / (psi.a() * psi.c()), (pt.z - psi.b()) / psi.a()};
  if (psi.swap()) std::swap(q.x, q.y);
  return q;
}

}  // namespace dani
