#include <doctest.h>

#include "dani/random.hpp"

using namespace dani;

namespace {

SurfaceSpec cubic() { return SurfaceSpec(RatPoly{0, -1, 0, 1}); }

}  // namespace

TEST_CASE("generators are the fields of -x, y, z") {
  for (const auto& p : {RatPoly{0, -1, 1}, RatPoly{0, -1, 0, 1}, RatPoly{1, 0, 1, 0, 1}}) {
    SurfaceSpec s(p);
    const auto g = generators(s);
    CHECK(field_from_function(-SurfacePoly::x(s)) == g.nu_x);
    CHECK(field_from_function(SurfacePoly::y(s)) == g.nu_y);
    CHECK(field_from_function(SurfacePoly::z(s)) == g.nu_z);
    // nu_{h(z)} = h'(z) nu_z
    const RatPoly h{0, 2, -1, 3};
    CHECK(field_from_function(SurfacePoly::from_z(s, h)) == SurfacePoly::from_z(s, h.derivative()) * g.nu_z);
  }
}

TEST_CASE("tangency is enforced") {
  SurfaceSpec s = cubic();
  const SurfacePoly x = SurfacePoly::x(s), zero(s);
  CHECK_THROWS_AS(VectorField(x, zero, zero), std::invalid_argument);
  CHECK(tangency_defect(zero, x, zero) == x * x);
}

TEST_CASE("divergence") {
  SurfaceSpec s = cubic();
  const auto g = generators(s);
  const SurfacePoly x = SurfacePoly::x(s), y = SurfacePoly::y(s), z = SurfacePoly::z(s);
  CHECK(divergence(g.nu_x).is_zero());
  CHECK(divergence(x * g.nu_z) == x);
  CHECK(divergence(z * g.nu_z).is_zero());
  // (x d/dx - y d/dy) = nu_z preserves the form; x nu_x = (0, x p', x^2) has divergence 0 too.
  CHECK(divergence(x * g.nu_x).is_zero());
  CHECK(divergence(y * g.nu_z) == -y);
}

TEST_CASE("divergence does not see the lift") {
  Rng rng(31);
  SurfaceSpec s = cubic();
  const AmbientPoly rel = AmbientPoly::relation(s);
  for (int k = 0; k < 30; ++k) {
    VectorField v = random_field(rng, s);
    AmbientPoly a = lift(v.a()).to_ambient() + rel * lift(random_function(rng, s, -1, 2, 2, 4)).to_ambient();
    AmbientPoly b = lift(v.b()).to_ambient() + rel * AmbientPoly::z();
    AmbientPoly c = lift(v.c()).to_ambient() - rel * AmbientPoly::x().pow(2);
    CHECK(divergence_of_lifts(s, a, b, c) == divergence(v));
  }
}

TEST_CASE("fields of functions") {
  Rng rng(32);
  for (const auto& p : {RatPoly{0, -1, 1}, RatPoly{0, -1, 0, 1}, RatPoly{2, -3, 0, 0, 0, 1}}) {
    SurfaceSpec s(p);
    for (int k = 0; k < 15; ++k) {
      SurfacePoly f = random_function(rng, s, -2, 3, 4, 6), g = random_function(rng, s, -2, 3, 4, 6);
      const VectorField nf = field_from_function(f);
      CHECK(divergence(nf).is_zero());
      CHECK(function_from_field(nf) == f.without_constant());
      CHECK(apply(nf, g) == bracket(f, g));
      CHECK(lie_bracket(nf, field_from_function(g)) == field_from_function(bracket(f, g)));
    }
  }
}

TEST_CASE("function_from_field rejects fields with divergence") {
  SurfaceSpec s = cubic();
  CHECK_THROWS_AS(function_from_field(SurfacePoly::x(s) * generators(s).nu_z), std::invalid_argument);
}

TEST_CASE("decomposition of functions") {
  SUBCASE("z is a torus direction, z^2 is not") {
    SurfaceSpec s = cubic();
    const SurfacePoly z = SurfacePoly::z(s);
    CHECK_FALSE(lnd_membership(z).has_value());
    auto d = lnd_membership(z * z);
    REQUIRE(d.has_value());
    CHECK(d->r == RatPoly{Rational(1, 3)});
    CHECK(decompose_function(z).torus_coeffs == std::vector<Rational>{1});
  }
  SUBCASE("quadratic p has no torus part") {
    SurfaceSpec s(RatPoly{0, -1, 1});
    CHECK(lnd_membership(SurfacePoly::z(s)).has_value());
  }
  SUBCASE("reconstruction") {
    Rng rng(33);
    for (const auto& p : {RatPoly{0, -1, 0, 1}, RatPoly{1, 0, 1, 0, 1}}) {
      SurfaceSpec s(p);
      for (int k = 0; k < 20; ++k) {
        SurfacePoly f = random_function(rng, s, -2, 3, 6, 6);
        const Ve0Decomposition d = decompose_ve0(field_from_function(f));
        CHECK(d.reconstruct(s) == f.without_constant());
        CHECK(d.torus_coeffs.size() == static_cast<std::size_t>(s.degree() - 2));
      }
    }
  }
}

TEST_CASE("nilpotency") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    c[1] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    SurfaceSpec s{RatPoly(c)};
    const auto g = generators(s);
    CHECK(nilpotency_index(g.nu_x, SurfacePoly::y(s), 20) == n + 1);
    CHECK(nilpotency_index(g.nu_y, SurfacePoly::x(s), 20) == n + 1);
    CHECK(nilpotency_index(g.nu_x, SurfacePoly::z(s), 20) == 2);
    CHECK_FALSE(nilpotency_index(g.nu_z, SurfacePoly::x(s), 20).has_value());
  }
  SurfaceSpec s = cubic();
  CHECK(nilpotency_index(generators(s).nu_x, SurfacePoly(s), 1) == 0);
  CHECK_THROWS_AS(nilpotency_index(generators(s).nu_x, SurfacePoly::x(s), 0), std::invalid_argument);
}

TEST_CASE("fields of the additive actions") {
  SurfaceSpec s = cubic();
  const auto g = generators(s);
  CHECK(unipotent_field(s, Side::X, RatPoly{0, 1}) == g.nu_x);
  CHECK(unipotent_field(s, Side::Y, RatPoly{0, 1}) == g.nu_y);
  CHECK_THROWS_AS(unipotent_field(s, Side::X, RatPoly{1, 1}), std::invalid_argument);
  const VectorField v = unipotent_field(s, Side::Y, RatPoly{0, 2, 0, -1});
  CHECK(divergence(v).is_zero());
  CHECK(nilpotency_index(v, SurfacePoly::z(s), 10) == 2);
  CHECK(nilpotency_index(v, SurfacePoly::x(s), 30).has_value());
  CHECK(lnd_membership(function_from_field(v)).has_value());
}
