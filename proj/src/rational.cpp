#include "essat/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "essat/errors.hpp"

namespace essat {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational value(parse_integer(num), d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  return c.get_str();
}

Integer floor(const Rational& value) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& value) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  m /= 2;
  return m;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) {
    Rational r = simplest_between(-hi, -lo);
    return -r;
  }
  // 0 <= lo < hi from here on; descend the continued fraction expansion.
  const Integer fl = floor(lo);
  if (fl + 1 < hi) return Rational(fl + 1);
  const Rational base(fl);
  if (lo == base) {
    // (fl, hi) with hi <= fl + 1: fl + 1/y with y > 1/(hi - fl).
    const Rational bound = Rational(1) / (hi - base);
    const Integer y = floor(bound) + 1;
    return base + Rational(1) / Rational(y);
  }
  const Rational inner = simplest_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
  return base + Rational(1) / inner;
}

}  // namespace essat
