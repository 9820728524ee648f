#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cslkit {

using Rational = mpq_class;
using RVector = std::vector<Rational>;

/// Raised for malformed or out-of-contract user input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a certificate fails to check (CLI exit code 3).
class CertificateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() = default;
  RationalInterval(Rational lo_, Rational hi_);

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  RationalInterval operator+(const RationalInterval& o) const;
  RationalInterval operator*(const RationalInterval& o) const;
  /// Division by an interval with strictly positive endpoints.
  RationalInterval operator/(const RationalInterval& o) const;
};

/// Parses "p/q", an integer, or a finite decimal ("0.125", "1e-3") exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& r);

/// 2^(-e) for e >= 0.
Rational pow2_neg(unsigned long e);

/// n^(-p) for n >= 1.
Rational inverse_power(unsigned long n, unsigned long p);

/// Rational power r^k.
Rational pow(const Rational& r, unsigned long k);

/// Renders r with 12 significant digits, round-half-even, %g layout.
std::string to_decimal(const Rational& r, int significant = 12);

/// Squared Euclidean norm.
Rational norm_sq(const RVector& v);

}  // namespace cslkit
