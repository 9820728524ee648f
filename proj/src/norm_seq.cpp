#include "cslkit/norm_seq.hpp"

#include <sstream>

namespace cslkit {

std::string to_string(CertStatus status) { return status == CertStatus::Proven ? "proven" : "asserted"; }

Rational NormSeq::at(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("norm sequences are indexed from 1");
  if (last_nonzero && n > *last_nonzero) return 0;
  return term(n);
}

NormSeq zero_sequence() {
  return {"zero", [](std::size_t) { return Rational(0); }, std::nullopt, 0, CertStatus::Proven};
}

unsigned long triangular_e(unsigned long n) {
  if (n < 1) throw InvalidInput("e_n is defined for n >= 1");
  return n * (n + 1) / 2;
}

Rational dyadic_tail_bound(unsigned long k) {
  if (k < 1) throw InvalidInput("tail bound is defined for k >= 1");
  return pow2_neg(triangular_e(k) + k);
}

namespace {

std::size_t cert_from(const TailCertificate& cert) {
  return std::visit([](const auto& c) { return c.from; }, cert);
}

}  // namespace

Rational tail_beyond(const TailCertificate& cert, std::size_t depth) {
  if (depth + 1 < cert_from(cert))
    throw InvalidInput("tail certificate starts at n = " + std::to_string(cert_from(cert)) + ", past depth + 1");
  return std::visit(
      [depth](const auto& c) -> Rational {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, GeometricTail>) {
          if (c.ratio <= 0 || c.ratio >= 1) throw InvalidInput("geometric ratio must lie in (0, 1)");
          return c.scale * pow(c.ratio, depth + 1) / (Rational(1) - c.ratio);
        } else if constexpr (std::is_same_v<C, PowerTail>) {
          if (c.power < 2) throw InvalidInput("power tail needs power >= 2");
          if (depth < 1) throw InvalidInput("power tail bound needs depth >= 1");
          return c.scale * inverse_power(depth, c.power - 1) / Rational(c.power - 1);
        } else {
          if (depth < 1) throw InvalidInput("triangular tail bound needs depth >= 1");
          return c.scale * dyadic_tail_bound(depth);
        }
      },
      cert);
}

Rational certified_term_bound(const TailCertificate& cert, std::size_t n) {
  return std::visit(
      [n](const auto& c) -> Rational {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, GeometricTail>)
          return c.scale * pow(c.ratio, n);
        else if constexpr (std::is_same_v<C, PowerTail>)
          return c.scale * inverse_power(n, c.power);
        else
          return c.scale * pow2_neg(triangular_e(n));
      },
      cert);
}

bool verify_terms(const NormSeq& s, std::size_t depth) {
  for (std::size_t n = 1; n <= depth; ++n) {
    const Rational v = s.at(n);
    if (v < 0) return false;
    if (s.tail && n >= cert_from(*s.tail) && v > certified_term_bound(*s.tail, n)) return false;
  }
  return true;
}

RationalInterval tail_enclosure(const NormSeq& s, std::size_t k, std::size_t depth) {
  if (depth < k + 1) throw InvalidInput("tail enclosure needs depth >= k + 1");
  Rational lo = 0;
  for (std::size_t n = k + 1; n <= depth; ++n) lo += s.at(n);
  if (s.last_nonzero && *s.last_nonzero <= depth) return {lo, lo};
  if (!s.tail) throw InvalidInput("sequence '" + s.name + "' has no tail certificate past depth " + std::to_string(depth));
  Rational hi = lo + tail_beyond(*s.tail, depth);
  return {std::move(lo), std::move(hi)};
}

std::string describe(const TailCertificate& cert) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, GeometricTail>)
          os << "s_n <= " << to_string(c.scale) << " * (" << to_string(c.ratio) << ")^n for n >= " << c.from;
        else if constexpr (std::is_same_v<C, PowerTail>)
          os << "s_n <= " << to_string(c.scale) << " * n^-" << c.power << " for n >= " << c.from;
        else
          os << "s_n <= " << to_string(c.scale) << " * 2^-e_n for n >= " << c.from;
      },
      cert);
  return os.str();
}

}  // namespace cslkit
