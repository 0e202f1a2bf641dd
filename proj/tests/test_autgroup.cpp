#include <doctest.h>

#include "dani/random.hpp"
#include "oracle.hpp"

using namespace dani;

namespace {

SurfaceSpec cubic() { return SurfaceSpec(RatPoly{0, -1, 0, 1}); }

Rational at(const SurfacePoly& f, const SurfacePoint& pt) { return oracle::eval(f, pt.x, pt.y, pt.z); }

RatPoly poly_of_degree(Rng& rng, int d, int height) {
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (auto& q : c) q = random_rational(rng, height);
  while (c.back() == 0) c.back() = random_rational(rng, height);
  return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("words are reduced") {
  SurfaceSpec s = cubic();
  AutElement g(s, {{Side::X, RatPoly{1}}, {Side::X, RatPoly{0, 2}}, {Side::Y, RatPoly{}}, {Side::X, RatPoly{-1}}}, 1);
  CHECK(g.word() == std::vector<UnipotentLetter>{{Side::X, RatPoly{0, 2}}});
  AutElement h(s, {{Side::Y, RatPoly{3}}, {Side::Y, RatPoly{-3}}}, 1);
  CHECK(h.is_identity());
  CHECK_THROWS_AS(AutElement(s, {}, 0), std::invalid_argument);
  const auto f = AutElement::letter(s, Side::X, RatPoly{1, 1});
  const auto g2 = AutElement::letter(s, Side::X, RatPoly{0, 0, 1});
  CHECK(compose(f, g2) == AutElement::letter(s, Side::X, RatPoly{1, 1, 1}));
}

TEST_CASE("inverse") {
  SurfaceSpec s = cubic();
  CHECK(inverse(AutElement(s)).is_identity());
  CHECK(inverse(AutElement::letter(s, Side::Y, RatPoly{2, -1})) == AutElement::letter(s, Side::Y, RatPoly{-2, 1}));
  CHECK(inverse(AutElement::torus_element(s, 3)) == AutElement::torus_element(s, Rational(1, 3)));
  Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    AutElement g = random_element(rng, s, 1 + k % 6, 3, 10);
    CHECK(compose(g, inverse(g)).is_identity());
    CHECK(compose(inverse(g), g).is_identity());
    CHECK(inverse(inverse(g)) == g);
  }
}

TEST_CASE("single letters and the torus") {
  SurfaceSpec s = cubic();
  const SurfacePoly x = SurfacePoly::x(s), y = SurfacePoly::y(s), z = SurfacePoly::z(s);
  const auto l = AutElement::letter(s, Side::X, RatPoly{1});
  CHECK(pullback(l, z) == z + x);
  // p(z + x)/x = y + 3 z^2 - 1 + 3 z x + x^2 for p = z^3 - z
  CHECK(pullback(l, y) == y + SurfacePoly::from_z(s, RatPoly{-1, 0, 3}) + 3 * (x * z) + x * x);
  CHECK(pullback(AutElement::torus_element(s, 5), x) == 5 * x);
  CHECK(pullback(AutElement::torus_element(s, 5), y) == Rational(1, 5) * y);

  const Rational p0 = s.p().evaluate(0);
  const SurfacePoint base{1, p0, 0};
  CHECK(apply_point(AutElement(s), base) == base);
  CHECK(apply_point(AutElement::torus_element(s, 2), base) == SurfacePoint{2, p0 / 2, 0});
  CHECK(apply_point(l, base) == SurfacePoint{1, s.p().evaluate(1), 1});
  CHECK_THROWS_AS(apply_point(l, SurfacePoint{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("group law at points") {
  Rng rng(52);
  for (const auto& p : {RatPoly{0, -1, 0, 1}, RatPoly{1, 1, 0, 1}}) {
    SurfaceSpec s(p);
    for (int k = 0; k < 30; ++k) {
      AutElement g1 = random_element(rng, s, 1 + k % 2, 2, 10), g2 = random_element(rng, s, 1 + (k / 2) % 2, 2, 10);
      for (int j = 0; j < 5; ++j) {
        SurfacePoint pt = random_point(rng, s, 10);
        const SurfacePoint img = apply_point(compose(g1, g2), pt);
        CHECK(on_surface(s, img));
        CHECK(img == apply_point(g1, apply_point(g2, pt)));
        CHECK(apply_point(inverse(g1), apply_point(g1, pt)) == pt);
        CHECK(oracle::fred(img) == oracle::apply_word(compose(g1, g2), oracle::fred(pt)));
      }
    }
  }
}

TEST_CASE("group law modulo a prime on long words") {
  Rng rng(59);
  SurfaceSpec s(RatPoly{0, -1, 0, 1});
  for (int k = 0; k < 30; ++k) {
    AutElement g1 = random_element(rng, s, 1 + k % 6, 3, 10), g2 = random_element(rng, s, 6 - k % 6, 3, 10);
    for (int j = 0; j < 5; ++j) {
      const SurfacePoint pt = random_point(rng, s, 10);
      const oracle::FqPoint q = oracle::fred(pt);
      const oracle::FqPoint img = oracle::apply_word(compose(g1, g2), q);
      CHECK(oracle::on_surface(s.p(), img));
      CHECK(img == oracle::apply_word(g1, oracle::apply_word(g2, q)));
      CHECK(oracle::apply_word(inverse(g2), oracle::apply_word(g2, q)) == q);
      CHECK(oracle::fred(apply_point(g2, pt)) == oracle::apply_word(g2, q));
    }
  }
}

TEST_CASE("pullback is evaluation after the map") {
  Rng rng(53);
  SurfaceSpec s = cubic();
  for (int k = 0; k < 20; ++k) {
    AutElement g = random_element(rng, s, 1 + k % 3, 1, 6);
    const Components c = components(g);
    SurfacePoly f = random_function(rng, s, -1, 1, 2, 4);
    const SurfacePoly pf = pullback(g, f);
    CHECK(pf == substitute(f, c));
    CHECK(c.u * c.v == evaluate(s.p(), c.w));
    for (int j = 0; j < 5; ++j) {
      SurfacePoint pt = random_point(rng, s, 8);
      const SurfacePoint img = apply_point(g, pt);
      CHECK(at(c.u, pt) == img.x);
      CHECK(at(c.v, pt) == img.y);
      CHECK(at(c.w, pt) == img.z);
      CHECK(at(pf, pt) == at(f, img));
    }
  }
}

TEST_CASE("pullback reverses composition") {
  Rng rng(54);
  SurfaceSpec s = cubic();
  for (int k = 0; k < 10; ++k) {
    AutElement g1 = random_element(rng, s, 1 + k % 2, 1, 5), g2 = random_element(rng, s, 1, 1, 5);
    SurfacePoly f = random_function(rng, s, -1, 1, 2, 4);
    CHECK(pullback(compose(g1, g2), f) == pullback(g2, pullback(g1, f)));
  }
}

TEST_CASE("component bidegrees") {
  SurfaceSpec s = cubic();
  const int n = 3;
  CHECK(component_bidegrees(AutElement(s)) == oracle::Bidegrees{{{1, 1}, {-1, -1}, {0, 0}}});
  CHECK(component_bidegrees(AutElement::torus_element(s, 7)) == oracle::Bidegrees{{{1, 1}, {-1, -1}, {0, 0}}});
  for (int d = 0; d <= 2; ++d) {
    const int n1 = d + 1;
    const auto g = AutElement::letter(s, Side::X, RatPoly::monomial(1, d) + RatPoly{2});
    CHECK(component_bidegrees(g) == oracle::Bidegrees{{{1, 1}, {-1, n * n1 - 1}, {0, n1}}});
  }
  // X acts first, then Y.
  const auto xy = AutElement(s, {{Side::Y, RatPoly{0, 1}}, {Side::X, RatPoly{1}}}, 1);
  const int n1 = 1, n2 = 2;
  CHECK(component_bidegrees(xy)[0] == std::pair{-n * n2 + 1, (n * n2 - 1) * (n * n1 - 1)});
}

TEST_CASE("bidegree recursion on alternating words") {
  Rng rng(55);
  for (const auto& p : {RatPoly{0, -1, 0, 1}, RatPoly{1, 0, 1, 0, 1}}) {
    SurfaceSpec s(p);
    const int n = s.degree();
    int tried = 0;
    while (tried < 12) {
      const int len = 1 + static_cast<int>(rng() % 5);
      bool x_side = rng() % 2;
      std::vector<oracle::Step> steps;
      long size = 1;
      for (int i = 0; i < len; ++i) {
        const int ni = 1 + static_cast<int>(rng() % 2);
        steps.push_back({x_side, ni});
        size *= n * ni - 1;
        x_side = !x_side;
      }
      if (size > 80) continue;
      ++tried;
      std::vector<UnipotentLetter> word;
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        word.push_back({it->x_side ? Side::X : Side::Y, poly_of_degree(rng, it->n_i - 1, 3)});
      }
      const AutElement g(s, word, random_rational(rng, 3) == 0 ? Rational(1) : Rational(2));
      CHECK(component_bidegrees(g) == oracle::word_bidegrees(n, steps));
      // alpha^- never increases along the prefixes
      int prev = 1;
      for (std::size_t i = 1; i <= steps.size(); ++i) {
        const AutElement prefix(s, {word.end() - static_cast<long>(i), word.end()}, 1);
        const int lo = component_bidegrees(prefix)[0].first;
        CHECK(lo <= prev);
        prev = lo;
      }
    }
  }
}

TEST_CASE("the volume form is preserved") {
  Rng rng(56);
  SurfaceSpec s = cubic();
  for (int k = 0; k < 20; ++k) CHECK(jacobian_factor(random_element(rng, s, 1 + k % 6, 3, 10)) == 1);
  const auto g = random_element(rng, s, 2, 1, 4);
  CHECK(jacobian_factor(components(g)) == 1);
}

TEST_CASE("adjoint action") {
  Rng rng(57);
  SurfaceSpec s = cubic();
  const auto gens = generators(s);
  CHECK(ad(AutElement(s), gens.nu_x) == gens.nu_x);
  CHECK(ad(AutElement::torus_element(s, 3), gens.nu_z) == gens.nu_z);
  CHECK(ad(AutElement::torus_element(s, 3), gens.nu_x) == Rational(1, 3) * gens.nu_x);
  for (int k = 0; k < 8; ++k) {
    AutElement g1 = random_element(rng, s, 1 + k % 2, 1, 4), g2 = random_element(rng, s, 1, 1, 4);
    VectorField t1 = random_field(rng, s), t2 = random_field(rng, s);
    CHECK(ad(compose(g1, g2), t1) == ad(g1, ad(g2, t1)));
    CHECK(ad(g1, lie_bracket(t1, t2)) == lie_bracket(ad(g1, t1), ad(g1, t2)));
    SurfacePoly f = random_function(rng, s, -1, 1, 2, 4);
    const VectorField moved = ad(g1, field_from_function(f));
    CHECK(divergence(moved).is_zero());
    CHECK(function_from_field(moved) == pullback(inverse(g1), f).without_constant());
    SurfacePoly h = decompose_function(f).lnd_function(s);
    CHECK(lnd_membership(function_from_field(ad(g1, field_from_function(h)))).has_value());
  }
}

TEST_CASE("affine isomorphisms") {
  SurfaceSpec p(RatPoly{0, -1, 0, 1}), q(RatPoly{0, -4, 0, 1});
  CHECK_THROWS_AS(AffineIso(p, q, 1, 0, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(AffineIso(p, p, 0, 0, 1, false), std::invalid_argument);
  const AffineIso id(p, p, 1, 0, 1, false);
  Rng rng(58);
  SurfacePoly f = random_function(rng, p, -2, 2, 3, 5);
  CHECK(iso_pullback(id, f) == f);
  CHECK(jacobian_factor_iso(id) == 1);
  CHECK(jacobian_factor_iso(AffineIso(p, p, 1, 0, 1, true)) == -1);

  const std::vector<AffineIso> isos{AffineIso(p, q, Rational(1, 2), 0, Rational(1, 2), false),
                                    AffineIso(p, q, Rational(1, 2), 0, Rational(1, 2), true),
                                    AffineIso(q, p, 2, 0, 2, false), AffineIso(p, p, -1, 0, -1, true)};
  for (const auto& psi : isos) {
    const Rational k = psi.swap() ? Rational(-1 / psi.a()) : Rational(1 / psi.a());
    CHECK(jacobian_factor_iso(psi) == k);
    for (int j = 0; j < 10; ++j) {
      SurfacePoint pt = random_point(rng, psi.source(), 8);
      const SurfacePoint img = apply_point(psi, pt);
      CHECK(on_surface(psi.target(), img));
      SurfacePoly g = random_function(rng, psi.target(), -1, 2, 3, 5);
      CHECK(at(iso_pullback(psi, g), pt) == at(g, img));
    }
    for (int j = 0; j < 10; ++j) {
      SurfacePoly h = random_function(rng, psi.source(), -2, 2, 3, 5);
      CHECK(iso_pullback(psi, iso_pushforward(psi, h)) == h);
      const SurfacePoly moved = function_from_field(ad_iso(psi, field_from_function(h)));
      CHECK(moved == (k * iso_pushforward(psi, h)).without_constant());
    }
    const VectorField nx = ad_iso(psi, generators(psi.source()).nu_x);
    CHECK(lnd_membership(function_from_field(nx)).has_value());
  }
  // With the scale a in place of 1/a the transported function is off by a^2.
  const AffineIso half(p, q, Rational(1, 2), 0, Rational(1, 2), false);
  const SurfacePoly x = SurfacePoly::x(p);
  CHECK_FALSE(function_from_field(ad_iso(half, field_from_function(x))) == half.a() * iso_pushforward(half, x));
}
