#include "dani/ratpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dani {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

IntegerForm integer_form(std::span<const Rational> c) {
  IntegerForm f;
  f.den = 1;
  for (const auto& q : c) mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den_mpz_t());
  f.num.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_divexact(f.num[i].get_mpz_t(), f.den.get_mpz_t(), c[i].get_den_mpz_t());
    f.num[i] *= c[i].get_num();
  }
  return f;
}

std::vector<Rational> from_integer_form(const std::vector<mpz_class>& num, const mpz_class& den) {
  std::vector<Rational> out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    out[i] = Rational(num[i], den);
    out[i].canonicalize();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
  return coeffs_.empty() ? zero_rational() : coeffs_.back();
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::integral() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    v[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  }
  return RatPoly(std::move(v));
}

Rational RatPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatPoly RatPoly::compose(const RatPoly& inner) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += RatPoly::constant(*it);
  }
  return acc;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly result = RatPoly::constant(1);
  RatPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly r = *this;
  Rational inv = 1 / leading();
  return r *= inv;
}

RatPoly RatPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::invalid_argument("negative shift");
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return RatPoly(std::move(v));
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Integer numerators over a common denominator: one gcd per output coefficient.
  const IntegerForm ia = integer_form(a.coeffs_), ib = integer_form(b.coeffs_);
  std::vector<mpz_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < ia.num.size(); ++i) {
    if (ia.num[i] == 0) continue;
    for (std::size_t j = 0; j < ib.num.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ia.num[i].get_mpz_t(), ib.num[j].get_mpz_t());
    }
  }
  return RatPoly(from_integer_form(acc, ia.den * ib.den));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator-(RatPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::optional<RatPoly> exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

BezoutCertificate extended_gcd(const RatPoly& a, const RatPoly& b) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {RatPoly{}, RatPoly{}, RatPoly{}};
  Rational inv = 1 / r0.leading();
  return {s0 * inv, t0 * inv, r0 * inv};
}

namespace {

// Prime factorisation of |n| by trial division and Pollard rho.
void factor_into(mpz_class n, std::map<mpz_class, int>& out);

mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      mpz_class diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  n = abs(n);
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
    if (n == 1) return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, int> fac;
  factor_into(n, fac);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, mult] : fac) {
    std::size_t count = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= mult; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  // Square-free part keeps the coefficients small.
  RatPoly g = f;
  if (g.degree() >= 1) g = divmod(g, gcd(g, g.derivative())).first;
  int low = 0;
  while (low <= g.degree() && g.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    std::vector<Rational> rest(g.coefficients().begin() + low, g.coefficients().end());
    g = RatPoly(std::move(rest));
  }
  if (g.degree() >= 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : g.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class a0 = mpz_class(g.coeff(0) * lcm_den);
    const mpz_class an = mpz_class(g.leading() * lcm_den);
    const auto num_divs = positive_divisors(a0);
    const auto den_divs = positive_divisors(an);
    for (const auto& e : den_divs) {
      for (const auto& d : num_divs) {
        for (int sign : {1, -1}) {
          Rational cand(d * sign, e);
          cand.canonicalize();
          if (cand.get_den() != e) continue;  // visited under the reduced denominator
          if (g.evaluate(cand) == 0) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string to_string(const RatPoly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeff(i);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace dani
