#include "dani/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dani {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AmbientPoly run() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    AmbientPoly e = expr();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed polynomial: " + what + " at position " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      skip();
      return true;
    }
    return false;
  }

  AmbientPoly expr() {
    AmbientPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  AmbientPoly term() {
    AmbientPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        AmbientPoly d = unary();
        if (!d.is_constant() || d.constant_value() == 0) {
          pos_ = at;
          fail("division by a non-constant or zero");
        }
        acc *= Rational(1 / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  AmbientPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  AmbientPoly power() {
    AmbientPoly base = atom();
    if (!accept('^')) return base;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    skip();
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  AmbientPoly atom() {
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational q(mpz_class(std::string(text_.substr(start, pos_ - start))));
      skip();
      return AmbientPoly::constant(q);
    }
    if (accept('(')) {
      AmbientPoly e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    ++pos_;
    AmbientPoly v;
    switch (c) {
      case 'x': case 'u': v = AmbientPoly::x(); break;
      case 'y': case 'v': v = AmbientPoly::y(); break;
      case 'z': case 'w': v = AmbientPoly::z(); break;
      default: --pos_; fail(std::string("unexpected character '") + c + "'");
    }
    skip();
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Monomial {
  Rational c;
  std::string body;  // "" for a constant
};

void append_block(std::vector<Monomial>& out, const RatPoly& coeff, const std::string& prefix, char zname) {
  for (int j = coeff.degree(); j >= 0; --j) {
    const Rational& c = coeff.coeff(j);
    if (c == 0) continue;
    std::string body = prefix;
    if (j > 0) {
      if (!body.empty()) body += "*";
      body += zname;
      if (j > 1) body += "^" + std::to_string(j);
    }
    out.push_back({c, std::move(body)});
  }
}

std::string join(const std::vector<Monomial>& ms) {
  if (ms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : ms) {
    const Rational mag = abs(m.c);
    if (first) {
      if (m.c < 0) os << "-";
    } else {
      os << (m.c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.body.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << m.body;
    }
  }
  return os.str();
}

std::string var_power(char name, int e) {
  std::string s(1, name);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

AmbientPoly parse_expression(std::string_view text) { return Parser(text).run(); }

RatPoly parse_univariate(std::string_view text) {
  AmbientPoly a = parse_expression(text);
  for (const auto& [k, c] : a.terms()) {
    if (k != AmbientPoly::Key{0, 0}) {
      throw std::invalid_argument("polynomial spec must be an expression in z only: '" + std::string(text) + "'");
    }
  }
  auto it = a.terms().find({0, 0});
  return it == a.terms().end() ? RatPoly() : it->second;
}

SurfacePoly parse_function(const SurfaceSpec& s, std::string_view text) {
  return canonicalize(s, parse_expression(text));
}

std::string format(const SurfacePoly& f, bool target_names) {
  const char xn = target_names ? 'u' : 'x';
  const char yn = target_names ? 'v' : 'y';
  const char zn = target_names ? 'w' : 'z';
  const AmbientLift l = lift(f);
  std::vector<Monomial> ms;
  for (auto it = l.x_part.rbegin(); it != l.x_part.rend(); ++it) append_block(ms, it->second, var_power(xn, it->first), zn);
  append_block(ms, l.z_part, "", zn);
  for (const auto& [m, c] : l.y_part) append_block(ms, c, var_power(yn, m), zn);
  return join(ms);
}

std::string format(const RatPoly& f, bool target_names) {
  std::vector<Monomial> ms;
  append_block(ms, f, "", target_names ? 'w' : 'z');
  return join(ms);
}

}  // namespace dani
