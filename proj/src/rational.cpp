#include "cslkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace cslkit {

RationalInterval::RationalInterval(Rational lo_, Rational hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

RationalInterval RationalInterval::operator+(const RationalInterval& o) const {
  return {lo + o.lo, hi + o.hi};
}

RationalInterval RationalInterval::operator*(const RationalInterval& o) const {
  const Rational c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

RationalInterval RationalInterval::operator/(const RationalInterval& o) const {
  if (o.lo <= 0) throw std::invalid_argument("interval division requires a positive divisor");
  const Rational c[4] = {lo / o.lo, lo / o.hi, hi / o.lo, hi / o.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, e);
  return z;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidInput("not a rational number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  // decimal with optional exponent
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    mpz_class ez = parse_integer(text.substr(e + 1), text);
    if (!ez.fits_slong_p() || abs(ez) > 100000) throw InvalidInput("exponent out of range: '" + std::string(text) + "'");
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto int_part = mantissa.substr(0, dot);
    auto frac_part = mantissa.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational r{mpz_class(digits, 10)};
  long shift = exponent - frac_digits;
  if (shift >= 0)
    r *= Rational(pow10(static_cast<unsigned long>(shift)));
  else
    r /= Rational(pow10(static_cast<unsigned long>(-shift)));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str(10);
}

Rational pow2_neg(unsigned long e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
  return Rational(mpz_class(1), den);
}

Rational inverse_power(unsigned long n, unsigned long p) {
  if (n == 0) throw std::invalid_argument("inverse_power requires n >= 1");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), n, p);
  return Rational(mpz_class(1), den);
}

Rational pow(const Rational& r, unsigned long k) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), k);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_decimal(const Rational& r, int significant) {
  if (r == 0) return "0";
  const bool negative = r < 0;
  Rational a = abs(r);

  // decimal exponent e with 10^e <= a < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto ten_pow = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                  : Rational(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (a >= ten_pow(e + 1)) ++e;
  while (a < ten_pow(e)) --e;

  Rational scaled = a * ten_pow(significant - 1 - e);
  mpz_class q = scaled.get_num() / scaled.get_den();
  Rational rem = scaled - Rational(q);
  const Rational half(1, 2);
  if (rem > half || (rem == half && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == pow10(static_cast<unsigned long>(significant))) {
    q = pow10(static_cast<unsigned long>(significant - 1));
    ++e;
  }
  std::string digits = q.get_str(10);
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out = negative ? "-" : "";
  if (e < -4 || e >= significant) {
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += buf;
  } else if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  } else {
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (digits.size() <= int_len) {
      out += digits + std::string(int_len - digits.size(), '0');
    } else {
      out += digits.substr(0, int_len) + "." + digits.substr(int_len);
    }
  }
  return out;
}

Rational norm_sq(const RVector& v) {
  Rational s = 0;
  for (const auto& c : v) s += c * c;
  return s;
}

}  // namespace cslkit
