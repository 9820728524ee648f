#pragma once

// Symbolic vectors on the OmegaNest, carried by their per-atom squared norms
// s_n = |(F_n - F_{n-1}) x|^2, n >= 1, together with a certificate bounding
// the tail beyond any working depth.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "cslkit/rational.hpp"

namespace cslkit {

/// s_n <= scale * ratio^n for n >= from, 0 < ratio < 1.
struct GeometricTail {
  std::size_t from = 1;
  Rational scale;
  Rational ratio;
};

/// s_n <= scale * n^(-power) for n >= from, power >= 2. The tail past K is
/// bounded by scale / ((power-1) K^(power-1)); for power 2 this is the
/// telescoping bound sum 1/(n(n-1)) = 1/K.
struct PowerTail {
  std::size_t from = 1;
  Rational scale;
  unsigned power = 2;
};

/// s_n <= scale * 2^(-e_n) for n >= from, e_n = n(n+1)/2. The tail past K is
/// strictly below scale * 2^(-e_K - K).
struct TriangularDyadicTail {
  std::size_t from = 1;
  Rational scale;
};

using TailCertificate = std::variant<GeometricTail, PowerTail, TriangularDyadicTail>;

enum class CertStatus { Proven, Asserted };
std::string to_string(CertStatus status);

struct NormSeq {
  std::string name;
  std::function<Rational(std::size_t)> term;
  std::optional<TailCertificate> tail;
  /// Terms past this index vanish; replaces a tail certificate.
  std::optional<std::size_t> last_nonzero;
  CertStatus status = CertStatus::Asserted;

  Rational at(std::size_t n) const;
};

NormSeq zero_sequence();

/// e_n = 1 + 2 + ... + n.
unsigned long triangular_e(unsigned long n);

/// 2^(-e_k - k): strict upper bound for sum_{n>k} 2^(-e_n).
Rational dyadic_tail_bound(unsigned long k);

/// Upper bound on sum_{n>K} of any sequence obeying `cert`.
Rational tail_beyond(const TailCertificate& cert, std::size_t depth);

/// Bound the certificate gives for the single term s_n.
Rational certified_term_bound(const TailCertificate& cert, std::size_t n);

/// Checks s_n <= bound for every certificate-covered n up to `depth`.
bool verify_terms(const NormSeq& s, std::size_t depth);

/// [sum_{k<n<=K} s_n, that + tail bound past K], enclosing |F_k^perp x|^2.
RationalInterval tail_enclosure(const NormSeq& s, std::size_t k, std::size_t depth);

std::string describe(const TailCertificate& cert);

}  // namespace cslkit
