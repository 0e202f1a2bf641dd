#include "dani/random.hpp"

namespace dani {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, int height) {
  Rational q(uniform(rng, -height, height), uniform(rng, 1, height));
  q.canonicalize();
  return q;
}

RatPoly random_ratpoly(Rng& rng, int max_degree, int height) {
  std::vector<Rational> c(static_cast<std::size_t>(uniform(rng, 0, max_degree) + 1));
  for (auto& q : c) q = random_rational(rng, height);
  return RatPoly(std::move(c));
}

SurfacePoly random_function(Rng& rng, const SurfaceSpec& s, int lo, int hi, int zdeg, int height) {
  SurfacePoly::Terms t;
  for (int i = lo; i <= hi; ++i) {
    if (uniform(rng, 0, 2) == 0) continue;  // sparse-ish
    RatPoly c = random_ratpoly(rng, zdeg, height);
    if (i < 0) c *= s.p_power(-i);
    if (!c.is_zero()) t.emplace(i, std::move(c));
  }
  return SurfacePoly(s, std::move(t));
}

VectorField random_field(Rng& rng, const SurfaceSpec& s) {
  const Generators g = generators(s);
  VectorField v = random_function(rng, s, -1, 1, 2, 4) * g.nu_x;
  v += random_function(rng, s, -1, 1, 2, 4) * g.nu_y;
  v += random_function(rng, s, -1, 1, 2, 4) * g.nu_z;
  return v;
}

AutElement random_element(Rng& rng, const SurfaceSpec& s, int length, int max_degree, int height) {
  std::vector<UnipotentLetter> word;
  Side side = uniform(rng, 0, 1) ? Side::X : Side::Y;
  for (int k = 0; k < length; ++k) {
    RatPoly a;
    while (a.is_zero()) a = random_ratpoly(rng, max_degree, height);
    word.push_back({side, a});
    side = side == Side::X ? Side::Y : Side::X;
  }
  Rational t = 1;
  if (uniform(rng, 0, 1)) {
    while ((t = random_rational(rng, 3)) == 0) {
    }
  }
  return AutElement(s, std::move(word), t);
}

SurfacePoint random_point(Rng& rng, const SurfaceSpec& s, int height) {
  const auto roots = rational_roots(s.p());
  if (!roots.empty() && uniform(rng, 0, 4) == 0) {
    const Rational& z = roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(roots.size()) - 1))];
    const Rational other = random_rational(rng, height);
    return uniform(rng, 0, 1) ? SurfacePoint{0, other, z} : SurfacePoint{other, 0, z};
  }
  Rational x;
  while ((x = random_rational(rng, height)) == 0) {
  }
  const Rational z = random_rational(rng, height);
  return {x, s.p().evaluate(z) / x, z};
}

}  // namespace dani
