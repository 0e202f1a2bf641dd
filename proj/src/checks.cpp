#include "dani/checks.hpp"

#include <functional>

#include "dani/autgroup.hpp"
#include "dani/expr.hpp"
#include "dani/forms.hpp"
#include "dani/random.hpp"

namespace dani {

namespace {

// Runs body `cases` times; body returns an empty string on success.
CheckOutcome check(const std::string& name, int cases, const std::function<std::string()>& body) {
  CheckOutcome out{name, cases, 0, {}};
  for (int k = 0; k < cases; ++k) {
    std::string why;
    try {
      why = body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      if (out.failures++ == 0) out.first_failure = why;
    }
  }
  return out;
}

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

}  // namespace

std::vector<CheckOutcome> run_invariant_suite(const SurfaceSpec& s, std::uint64_t seed, int samples) {
  Rng rng(seed);
  auto fn = [&] { return random_function(rng, s, -2, 3, 4, 5); };
  auto small = [&] { return random_function(rng, s, -1, 2, 2, 3); };
  std::vector<CheckOutcome> out;

  out.push_back(check("bracket antisymmetry", samples, [&] {
    auto f = fn(), g = fn();
    return expect((bracket(f, g) + bracket(g, f)).is_zero(), format(f) + " | " + format(g));
  }));
  out.push_back(check("bracket Jacobi", samples, [&] {
    auto f = small(), g = small(), h = small();
    auto j = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
    return expect(j.is_zero(), format(f) + " | " + format(g) + " | " + format(h));
  }));
  out.push_back(check("bracket Leibniz", samples, [&] {
    auto f = small(), g = small(), h = small();
    return expect(bracket(f, g * h) == bracket(f, g) * h + g * bracket(f, h), format(f));
  }));
  out.push_back(check("bracket lift independence", samples, [&] {
    auto f = fn(), g = fn();
    auto shifted = lift(f).to_ambient() + AmbientPoly::relation(s) * lift(small()).to_ambient();
    return expect(bracket_of_lifts(s, shifted, lift(g).to_ambient()) == bracket(f, g), format(f));
  }));
  out.push_back(check("divergence of nu_f vanishes", samples, [&] {
    auto f = fn();
    return expect(divergence(field_from_function(f)).is_zero(), format(f));
  }));
  out.push_back(check("field/function duality", samples, [&] {
    auto f = fn();
    return expect(function_from_field(field_from_function(f)) == f.without_constant(), format(f));
  }));
  out.push_back(check("contraction of omega by nu_f is df", samples, [&] {
    auto f = fn();
    return expect(contract_two(field_from_function(f), TwoForm::volume(s)) == d0(f), format(f));
  }));
  out.push_back(check("d1 d0 = 0", samples, [&] {
    auto f = fn();
    return expect(d1(d0(f)).coefficient().is_zero(), format(f));
  }));
  out.push_back(check("Lie derivative of omega is div * omega", samples, [&] {
    auto t = random_field(rng, s);
    return expect(lie_derivative(t, TwoForm::volume(s)).coefficient() == divergence(t), "random field");
  }));
  out.push_back(check("decomposition reconstructs", samples, [&] {
    auto f = fn().without_constant();
    return expect(decompose_function(f).reconstruct(s) == f, format(f));
  }));
  out.push_back(check("group law at points", samples, [&] {
    auto g1 = random_element(rng, s, 3, 2, 4), g2 = random_element(rng, s, 3, 2, 4);
    auto g12 = compose(g1, g2);
    for (int k = 0; k < 5; ++k) {
      auto pt = random_point(rng, s, 5);
      if (!(apply_point(g12, pt) == apply_point(g1, apply_point(g2, pt)))) return std::string("compose mismatch");
      if (!(apply_point(inverse(g1), apply_point(g1, pt)) == pt)) return std::string("inverse mismatch");
    }
    return expect(compose(g1, inverse(g1)).is_identity(), "g o g^-1 is not the identity");
  }));
  out.push_back(check("pullback matches points", samples, [&] {
    // Component degrees grow like prod (n n_i - 1); keep words short here.
    auto g = random_element(rng, s, 2, 1, 4);
    auto f = small();
    auto pulled = pullback(g, f);
    auto pt = random_point(rng, s, 5);
    auto img = apply_point(g, pt);
    auto value = [&](const SurfacePoly& h, const SurfacePoint& q) {
      const AmbientLift l = lift(h);
      Rational v = l.z_part.evaluate(q.z);
      for (const auto& [i, c] : l.x_part) {
        Rational xp = 1;
        for (int e = 0; e < i; ++e) xp *= q.x;
        v += c.evaluate(q.z) * xp;
      }
      for (const auto& [m, c] : l.y_part) {
        Rational yp = 1;
        for (int e = 0; e < m; ++e) yp *= q.y;
        v += c.evaluate(q.z) * yp;
      }
      return v;
    };
    return expect(value(pulled, pt) == value(f, img), format(f));
  }));
  out.push_back(check("jacobian factor is 1", samples, [&] {
    return expect(jacobian_factor(random_element(rng, s, 3, 2, 4)) == 1, "k != 1");
  }));
  out.push_back(check("nilpotency of nu_x on y", 1, [&] {
    auto k = nilpotency_index(generators(s).nu_x, SurfacePoly::y(s), 2 * s.degree() + 2);
    return expect(k && *k == s.degree() + 1, "index differs from deg p + 1");
  }));
  return out;
}

}  // namespace dani
