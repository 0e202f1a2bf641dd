#include "dani/ring.hpp"

#include <cassert>
#include <stdexcept>

namespace dani {

SurfaceSpec::SurfaceSpec(RatPoly p) {
  if (p.degree() < 2) throw std::invalid_argument("surface polynomial must have degree >= 2");
  auto data = std::make_shared<Data>();
  data->dp = p.derivative();
  data->ddp = data->dp.derivative();
  data->bezout = extended_gcd(p, data->dp);
  if (data->bezout.g.degree() != 0) {
    throw std::invalid_argument("surface polynomial " + to_string(p) + " has a repeated root");
  }
  data->p = std::move(p);
  data->powers.push_back(RatPoly::constant(1));
  d_ = std::move(data);
}

const RatPoly& SurfaceSpec::p_power(int m) const {
  if (m < 0) throw std::invalid_argument("negative power of p");
  std::lock_guard lock(d_->mu);
  while (static_cast<int>(d_->powers.size()) <= m) {
    d_->powers.push_back(d_->powers.back() * d_->p);
  }
  return d_->powers[static_cast<std::size_t>(m)];
}

void require_same(const SurfaceSpec& a, const SurfaceSpec& b) {
  if (!(a == b)) throw std::invalid_argument("mismatched surface specs");
}

namespace {

const RatPoly& zero_poly() {
  static const RatPoly zero;
  return zero;
}

void accumulate(std::map<int, RatPoly>& terms, int i, const RatPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void debug_check([[maybe_unused]] const SurfacePoly& f) { assert(f.is_valid()); }

}  // namespace

SurfacePoly::SurfacePoly(SurfaceSpec spec, Terms terms) : spec_(std::move(spec)) {
  for (auto& [i, c] : terms) {
    if (c.is_zero()) continue;
    if (i < 0 && !exact_div(c, spec_.p_power(-i))) {
      throw std::invalid_argument("coefficient of x^" + std::to_string(i) +
                                  " is not divisible by p^" + std::to_string(-i));
    }
    terms_.emplace(i, std::move(c));
  }
}

SurfacePoly SurfacePoly::constant(const SurfaceSpec& s, const Rational& c) {
  return from_z(s, RatPoly::constant(c));
}

SurfacePoly SurfacePoly::from_z(const SurfaceSpec& s, const RatPoly& a, int x_index) {
  Terms t;
  if (!a.is_zero()) t.emplace(x_index, a);
  return SurfacePoly(s, std::move(t));
}

const RatPoly& SurfacePoly::coeff(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? zero_poly() : it->second;
}

bool SurfacePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0 &&
                            terms_.begin()->second.is_constant());
}

Rational SurfacePoly::constant_term() const { return coeff(0).coeff(0); }

SurfacePoly SurfacePoly::without_constant() const {
  SurfacePoly r = *this;
  auto it = r.terms_.find(0);
  if (it != r.terms_.end()) {
    it->second -= RatPoly::constant(it->second.coeff(0));
    if (it->second.is_zero()) r.terms_.erase(it);
  }
  return r;
}

std::pair<int, int> SurfacePoly::bidegree() const {
  if (terms_.empty()) throw std::domain_error("zero input");
  return {terms_.begin()->first, terms_.rbegin()->first};
}

std::optional<SurfacePoly> SurfacePoly::exact_div_x(int m) const {
  if (m < 0) throw std::invalid_argument("exact_div_x needs m >= 0");
  Terms t;
  for (const auto& [i, c] : terms_) {
    int j = i - m;
    if (j < 0 && !exact_div(c, spec_.p_power(-j))) return std::nullopt;
    t.emplace(j, c);
  }
  SurfacePoly r(spec_);
  r.terms_ = std::move(t);
  return r;
}

std::optional<SurfacePoly> SurfacePoly::exact_div_z(const RatPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  Terms t;
  for (const auto& [i, c] : terms_) {
    auto q = exact_div(c, d);
    if (!q) return std::nullopt;
    if (i < 0 && !exact_div(*q, spec_.p_power(-i))) return std::nullopt;
    t.emplace(i, std::move(*q));
  }
  SurfacePoly r(spec_);
  r.terms_ = std::move(t);
  return r;
}

bool SurfacePoly::is_valid() const {
  for (const auto& [i, c] : terms_) {
    if (c.is_zero()) return false;
    if (i < 0 && !exact_div(c, spec_.p_power(-i))) return false;
  }
  return true;
}

SurfacePoly& SurfacePoly::operator+=(const SurfacePoly& o) {
  require_same(spec_, o.spec_);
  for (const auto& [i, c] : o.terms_) accumulate(terms_, i, c);
  debug_check(*this);
  return *this;
}

SurfacePoly& SurfacePoly::operator-=(const SurfacePoly& o) {
  require_same(spec_, o.spec_);
  for (const auto& [i, c] : o.terms_) accumulate(terms_, i, -c);
  debug_check(*this);
  return *this;
}

SurfacePoly& SurfacePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, a] : terms_) a *= c;
  return *this;
}

SurfacePoly& SurfacePoly::operator*=(const RatPoly& zpoly) {
  if (zpoly.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, a] : terms_) a = a * zpoly;
  return *this;
}

namespace {

struct LaurentIntegerForm {
  std::vector<std::pair<int, std::vector<mpz_class>>> terms;
  mpz_class den = 1;
};

LaurentIntegerForm laurent_integer_form(const SurfacePoly::Terms& t) {
  LaurentIntegerForm f;
  for (const auto& [i, c] : t) {
    for (const auto& q : c.coefficients()) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den_mpz_t());
  }
  mpz_class scale;
  for (const auto& [i, c] : t) {
    std::vector<mpz_class> num(c.coefficients().size());
    for (std::size_t k = 0; k < num.size(); ++k) {
      const Rational& q = c.coefficients()[k];
      mpz_divexact(scale.get_mpz_t(), f.den.get_mpz_t(), q.get_den_mpz_t());
      num[k] = scale * q.get_num();
    }
    f.terms.emplace_back(i, std::move(num));
  }
  return f;
}

}  // namespace

SurfacePoly operator*(const SurfacePoly& a, const SurfacePoly& b) {
  require_same(a.spec_, b.spec_);
  SurfacePoly r(a.spec_);
  if (a.is_zero() || b.is_zero()) return r;
  const LaurentIntegerForm fa = laurent_integer_form(a.terms_), fb = laurent_integer_form(b.terms_);
  std::map<int, std::vector<mpz_class>> acc;
  for (const auto& [i, na] : fa.terms) {
    for (const auto& [j, nb] : fb.terms) {
      auto& out = acc[i + j];
      if (out.size() < na.size() + nb.size() - 1) out.resize(na.size() + nb.size() - 1);
      for (std::size_t k = 0; k < na.size(); ++k) {
        if (na[k] == 0) continue;
        for (std::size_t l = 0; l < nb.size(); ++l) {
          mpz_addmul(out[k + l].get_mpz_t(), na[k].get_mpz_t(), nb[l].get_mpz_t());
        }
      }
    }
  }
  const mpz_class den = fa.den * fb.den;
  for (auto& [i, num] : acc) {
    RatPoly c(from_integer_form(num, den));
    if (!c.is_zero()) r.terms_.emplace(i, std::move(c));
  }
  debug_check(r);
  return r;
}

SurfacePoly evaluate(const RatPoly& h, const SurfacePoly& f) {
  SurfacePoly acc(f.spec());
  auto coeffs = h.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * f;
    acc += SurfacePoly::constant(f.spec(), *it);
  }
  return acc;
}

SurfacePoly pow(const SurfacePoly& f, unsigned e) {
  SurfacePoly result = SurfacePoly::constant(f.spec(), 1);
  SurfacePoly base = f;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------

AmbientPoly::AmbientPoly(Terms terms) {
  for (auto& [k, c] : terms) {
    if (k.first < 0 || k.second < 0) throw std::invalid_argument("negative exponent in ambient polynomial");
    if (!c.is_zero()) terms_.emplace(k, std::move(c));
  }
}

AmbientPoly AmbientPoly::constant(const Rational& c) { return monomial(RatPoly::constant(c), 0, 0); }

AmbientPoly AmbientPoly::monomial(const RatPoly& zcoeff, int xexp, int yexp) {
  Terms t;
  t.emplace(Key{xexp, yexp}, zcoeff);
  return AmbientPoly(std::move(t));
}

AmbientPoly AmbientPoly::relation(const SurfaceSpec& s) {
  return monomial(RatPoly::constant(1), 1, 1) - monomial(s.p(), 0, 0);
}

bool AmbientPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Key{0, 0} && terms_.begin()->second.is_constant());
}

Rational AmbientPoly::constant_value() const {
  auto it = terms_.find(Key{0, 0});
  return it == terms_.end() ? Rational(0) : it->second.coeff(0);
}

void AmbientPoly::add_term(const Key& k, const RatPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AmbientPoly AmbientPoly::partial_x() const {
  AmbientPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.first > 0) r.add_term({k.first - 1, k.second}, c * Rational(k.first));
  }
  return r;
}

AmbientPoly AmbientPoly::partial_y() const {
  AmbientPoly r;
  for (const auto& [k, c] : terms_) {
    if (k.second > 0) r.add_term({k.first, k.second - 1}, c * Rational(k.second));
  }
  return r;
}

AmbientPoly AmbientPoly::partial_z() const {
  AmbientPoly r;
  for (const auto& [k, c] : terms_) r.add_term(k, c.derivative());
  return r;
}

AmbientPoly AmbientPoly::pow(unsigned e) const {
  AmbientPoly result = constant(1);
  AmbientPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

AmbientPoly& AmbientPoly::operator+=(const AmbientPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AmbientPoly& AmbientPoly::operator-=(const AmbientPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AmbientPoly& AmbientPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, a] : terms_) a *= c;
  return *this;
}

AmbientPoly operator*(const AmbientPoly& a, const AmbientPoly& b) {
  AmbientPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

AmbientPoly AmbientLift::to_ambient() const {
  AmbientPoly::Terms t;
  for (const auto& [i, c] : x_part) t.emplace(AmbientPoly::Key{i, 0}, c);
  for (const auto& [m, c] : y_part) t.emplace(AmbientPoly::Key{0, m}, c);
  if (!z_part.is_zero()) t.emplace(AmbientPoly::Key{0, 0}, z_part);
  return AmbientPoly(std::move(t));
}

SurfacePoly AmbientLift::to_surface(const SurfaceSpec& s) const {
  SurfacePoly::Terms t;
  for (const auto& [i, c] : x_part) {
    if (i < 1) throw std::invalid_argument("x part of a lift needs exponents >= 1");
    if (!c.is_zero()) t.emplace(i, c);
  }
  for (const auto& [m, c] : y_part) {
    if (m < 1) throw std::invalid_argument("y part of a lift needs exponents >= 1");
    if (!c.is_zero()) t.emplace(-m, c * s.p_power(m));
  }
  if (!z_part.is_zero()) t.emplace(0, z_part);
  return SurfacePoly(s, std::move(t));
}

AmbientLift lift(const SurfacePoly& f) {
  AmbientLift l;
  const auto& s = f.spec();
  for (const auto& [i, c] : f.terms()) {
    if (i > 0) {
      l.x_part.emplace(i, c);
    } else if (i == 0) {
      l.z_part = c;
    } else {
      auto q = exact_div(c, s.p_power(-i));
      if (!q) throw std::logic_error("surface polynomial violates the divisibility invariant");
      l.y_part.emplace(-i, std::move(*q));
    }
  }
  return l;
}

SurfacePoly canonicalize(const SurfaceSpec& s, const AmbientPoly& raw) {
  // x^i y^j c(z) = p(z)^j c(z) x^{i-j} on the surface.
  SurfacePoly::Terms t;
  for (const auto& [k, c] : raw.terms()) accumulate(t, k.first - k.second, c * s.p_power(k.second));
  return SurfacePoly(s, std::move(t));
}

RelationDivision divide_by_relation(const SurfaceSpec& s, const AmbientPoly& raw) {
  // x^i y^j c with k = min(i, j) > 0:
  //   (xy)^k - p^k = (xy - p) * sum_{l<k} (xy)^l p^{k-1-l}
  AmbientPoly quotient;
  AmbientLift rem;
  auto add_rem = [&](int xe, int ye, const RatPoly& c) {
    if (c.is_zero()) return;
    if (xe > 0) {
      auto& slot = rem.x_part[xe];
      slot += c;
      if (slot.is_zero()) rem.x_part.erase(xe);
    } else if (ye > 0) {
      auto& slot = rem.y_part[ye];
      slot += c;
      if (slot.is_zero()) rem.y_part.erase(ye);
    } else {
      rem.z_part += c;
    }
  };
  for (const auto& [key, c] : raw.terms()) {
    const auto [i, j] = key;
    const int k = std::min(i, j);
    if (k == 0) {
      add_rem(i, j, c);
      continue;
    }
    for (int l = 0; l < k; ++l) {
      quotient += AmbientPoly::monomial(c * s.p_power(k - 1 - l), i - k + l, j - k + l);
    }
    add_rem(i - k, j - k, c * s.p_power(k));
  }
  return {std::move(quotient), std::move(rem)};
}

std::array<AmbientLift, 3> partials(const SurfacePoly& f) {
  const AmbientLift l = lift(f);
  AmbientLift fx, fy, fz;
  for (const auto& [i, c] : l.x_part) {
    RatPoly d = c * Rational(i);
    if (i == 1) {
      fx.z_part += d;
    } else {
      fx.x_part.emplace(i - 1, std::move(d));
    }
    RatPoly dz = c.derivative();
    if (!dz.is_zero()) fz.x_part.emplace(i, std::move(dz));
  }
  for (const auto& [m, c] : l.y_part) {
    RatPoly d = c * Rational(m);
    if (m == 1) {
      fy.z_part += d;
    } else {
      fy.y_part.emplace(m - 1, std::move(d));
    }
    RatPoly dz = c.derivative();
    if (!dz.is_zero()) fz.y_part.emplace(m, std::move(dz));
  }
  fz.z_part = l.z_part.derivative();
  return {std::move(fx), std::move(fy), std::move(fz)};
}

Gradient gradient(const SurfacePoly& f) {
  const auto& s = f.spec();
  auto parts = partials(f);
  return {parts[0].to_surface(s), parts[1].to_surface(s), parts[2].to_surface(s)};
}

Gradient gradient(const SurfaceSpec& s, const AmbientPoly& l) {
  return {canonicalize(s, l.partial_x()), canonicalize(s, l.partial_y()), canonicalize(s, l.partial_z())};
}

SurfacePoly bracket(const SurfaceSpec& s, const Gradient& f, const Gradient& g) {
  const SurfacePoly x = SurfacePoly::x(s);
  const SurfacePoly y = SurfacePoly::y(s);
  SurfacePoly r = s.dp() * (f.dy * g.dx - f.dx * g.dy);
  r += x * (f.dz * g.dx - f.dx * g.dz);
  r -= y * (f.dz * g.dy - f.dy * g.dz);
  return r;
}

SurfacePoly bracket(const SurfacePoly& f, const SurfacePoly& g) {
  require_same(f.spec(), g.spec());
  return bracket(f.spec(), gradient(f), gradient(g));
}

SurfacePoly bracket_of_lifts(const SurfaceSpec& s, const AmbientPoly& f, const AmbientPoly& g) {
  return bracket(s, gradient(s, f), gradient(s, g));
}

}  // namespace dani
