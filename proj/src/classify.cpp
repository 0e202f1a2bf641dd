#include "dani/classify.hpp"

#include <stdexcept>

namespace dani {

namespace {

RatPoly binomial_power(const RatPoly& b, int e) { return b.pow(static_cast<unsigned>(e)); }

Rational binom(int m, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return Rational(r);
}

// Strip every factor a from f.
RatPoly strip_zero_root(RatPoly f) {
  while (!f.is_zero() && f.coeff(0) == 0) f = divmod(f, RatPoly::variable()).first;
  return f;
}

}  // namespace

ClassificationResult is_isomorphic(const SurfaceSpec& ps, const SurfaceSpec& qs) {
  ClassificationResult res;
  const RatPoly& p = ps.p();
  const RatPoly& q = qs.p();
  const int n = p.degree();
  if (q.degree() != n) return res;

  // c = p_n a^{n-2} / q_n and b = beta1 a + beta0 from the two top coefficients.
  const Rational lead = p.leading() / q.leading();
  const Rational beta1 = q.coeff(n - 1) / (q.leading() * n);
  const Rational beta0 = -p.coeff(n - 1) / (p.leading() * n);
  const RatPoly b{beta0, beta1};

  // Coefficient of w^k in p(a w + b) - c a^2 q(w), divided by a^k:
  //   sum_m p_m C(m, k) b^{m-k} - lead q_k a^{n-k}.
  RatPoly residual;
  for (int k = 0; k <= n - 2; ++k) {
    RatPoly fk = RatPoly::monomial(-lead * q.coeff(k), n - k);
    for (int m = k; m <= n; ++m) {
      if (p.coeff(m) == 0) continue;
      fk += binomial_power(b, m - k) * Rational(p.coeff(m) * binom(m, k));
    }
    residual = gcd(residual, fk);
  }
  residual = strip_zero_root(residual);
  if (residual.is_zero()) throw std::logic_error("affine system degenerate for a valid spec");

  for (const Rational& a : rational_roots(residual)) {
    const Rational bb = b.evaluate(a);
    Rational c = lead;
    for (int i = 0; i < n - 2; ++i) c *= a;
    res.witnesses.emplace_back(ps, qs, a, bb, c, false);
    const RatPoly factor{-a, 1};
    while (auto quo = exact_div(residual, factor)) residual = *quo;
  }
  residual = residual.degree() >= 1 ? residual.monic() : RatPoly();
  res.residual = residual;
  res.isomorphic = !res.witnesses.empty() || !res.residual.is_zero() || n == 2;
  return res;
}

RootSymmetries affine_root_symmetries(const SurfaceSpec& p) {
  ClassificationResult r = is_isomorphic(p, p);
  RootSymmetries out;
  for (const auto& w : r.witnesses) out.rational.push_back({w.a(), w.b(), w.c() * w.a() * w.a()});
  out.residual = std::move(r.residual);
  return out;
}

std::vector<AffineIso> outer_representatives(const SurfaceSpec& p) {
  std::vector<AffineIso> out;
  for (const auto& w : is_isomorphic(p, p).witnesses) {
    const bool identity = w.a() == 1 && w.b() == 0 && w.c() == 1;
    if (!identity) out.push_back(w);
    out.emplace_back(p, p, w.a(), w.b(), w.c(), true);
  }
  return out;
}

}  // namespace dani
