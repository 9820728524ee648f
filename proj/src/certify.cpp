#include "cslkit/certify.hpp"

#include <algorithm>

namespace cslkit {

// --- A ----------------------------------------------------------------------

SequencePair construction_A() {
  NormSeq x{"A.x", [](std::size_t n) { return inverse_power(n, 4); }, PowerTail{1, Rational(1), 4}, std::nullopt,
            CertStatus::Proven};
  NormSeq y{"A.y", [](std::size_t n) { return inverse_power(n, 2); }, PowerTail{1, Rational(1), 2}, std::nullopt,
            CertStatus::Proven};
  return {std::move(x), std::move(y)};
}

ARatioCheck certify_A_ratio(std::size_t k, std::size_t depth) {
  if (depth <= k) throw InvalidInput("certify_A_ratio needs depth > k");
  ARatioCheck c;
  c.k = k;
  c.depth = depth;
  c.num = 0;
  c.den = 0;
  for (std::size_t n = k + 1; n <= depth; ++n) {
    c.num += inverse_power(n, 2);
    c.den += inverse_power(n, 4);
  }
  c.ratio = c.num / c.den;
  c.threshold = Rational((k + 1) * (k + 1));
  c.holds = c.ratio >= c.threshold;
  return c;
}

std::vector<ARatioCheck> certify_A_batch(std::size_t k_max, std::size_t depth, Execution exec) {
  if (k_max < 1) throw InvalidInput("k_max must be at least 1");
  if (depth <= k_max) throw InvalidInput("depth must exceed k_max");
  std::vector<ARatioCheck> out(k_max);
  detail::for_each_index(k_max, exec, [&](std::size_t i) { out[i] = certify_A_ratio(i + 1, depth); });
  return out;
}

// --- B ----------------------------------------------------------------------

LambdaMu lambda_mu_sequences(std::size_t n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  LambdaMu s;
  s.lambda.reserve(n_max + 1);
  s.mu.reserve(n_max + 1);
  s.lambda.emplace_back(1);
  s.mu.emplace_back(1);
  const Rational half(1, 2);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational nn(static_cast<unsigned long>(n));
    if (n % 2 == 1) {
      Rational l = s.lambda.back() * half;
      Rational m = std::min(Rational(s.mu.back() * half), Rational(l / nn));
      s.lambda.push_back(std::move(l));
      s.mu.push_back(std::move(m));
    } else {
      Rational m = s.mu.back() * half;
      Rational l = std::min(Rational(s.lambda.back() * half), Rational(m / nn));
      s.lambda.push_back(std::move(l));
      s.mu.push_back(std::move(m));
    }
  }
  return s;
}

ConstructionB construction_B(std::size_t n_max) {
  ConstructionB b{lambda_mu_sequences(n_max), {}, {}};
  auto weights = std::make_shared<const LambdaMu>(b.weights);
  auto scaled = [weights](const std::vector<Rational> LambdaMu::*which) {
    return [weights, which](std::size_t n) {
      const auto& seq = (*weights).*which;
      if (n >= seq.size()) throw InvalidInput("construction B evaluated past its table");
      Rational v = seq[n] / Rational(static_cast<unsigned long>(n));
      return Rational(v * v);
    };
  };
  // mu_n, lambda_n <= 2^-n, so both sequences are dominated by 4^-n
  b.x = NormSeq{"B.x", scaled(&LambdaMu::mu), GeometricTail{1, Rational(1), Rational(1, 4)}, std::nullopt,
                CertStatus::Proven};
  b.y = NormSeq{"B.y", scaled(&LambdaMu::lambda), GeometricTail{1, Rational(1), Rational(1, 4)}, std::nullopt,
                CertStatus::Proven};
  return b;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::All: return "all";
  }
  return {};
}

namespace {

bool in_class(Parity p, std::size_t n) {
  return p == Parity::All || (p == Parity::Even) == (n % 2 == 0);
}

std::optional<RangeOutside> outside_by(Parity p, const std::vector<Rational>& terms, std::size_t n_max) {
  RangeOutside out;
  out.rule = p;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!in_class(p, n)) continue;
    if (terms[n] < 1) return std::nullopt;
    out.witnesses.push_back(n);
    out.witness_terms.push_back(terms[n]);
  }
  if (out.witnesses.empty()) return std::nullopt;
  return out;
}

}  // namespace

RangeMembership d_range_membership(const NormSeq& s, const std::vector<Rational>& delta, std::size_t n_max,
                                   const MembershipHint& hint, CertStatus hint_status) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  if (delta.size() <= n_max) throw InvalidInput("weight sequence shorter than n_max");
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (delta[n] <= 0) throw InvalidInput("weights must be positive (n = " + std::to_string(n) + ")");
    if (n > 1 && delta[n] > delta[n - 1]) throw InvalidInput("weights must be decreasing (n = " + std::to_string(n) + ")");
  }
  std::vector<Rational> terms(n_max + 1, Rational(0));
  for (std::size_t n = 1; n <= n_max; ++n) terms[n] = s.at(n) / (delta[n] * delta[n]);

  if (const auto* cert = std::get_if<TailCertificate>(&hint)) {
    const std::size_t from = std::visit([](const auto& c) { return c.from; }, *cert);
    for (std::size_t n = std::max<std::size_t>(from, 1); n <= n_max; ++n)
      if (terms[n] > certified_term_bound(*cert, n))
        throw CertificateFailure("range membership: reference bound fails at n = " + std::to_string(n));
    return RangeInside{*cert, hint_status, n_max};
  }
  if (const auto* rule = std::get_if<Parity>(&hint)) {
    auto out = outside_by(*rule, terms, n_max);
    if (!out) throw CertificateFailure("range membership: witness rule '" + to_string(*rule) + "' fails");
    out->status = hint_status;
    return *out;
  }

  for (Parity p : {Parity::All, Parity::Even, Parity::Odd})
    if (auto out = outside_by(p, terms, n_max)) return *out;
  Rational c = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational nn(static_cast<unsigned long>(n));
    c = std::max(c, Rational(terms[n] * nn * nn));
  }
  return RangeInside{PowerTail{1, c, 2}, CertStatus::Asserted, n_max};
}

// --- C ----------------------------------------------------------------------

SequencePair construction_C() {
  auto dyadic_on = [](bool odd) {
    return [odd](std::size_t n) { return (n % 2 == 1) == odd ? pow2_neg(triangular_e(n)) : Rational(0); };
  };
  NormSeq a{"C.a", dyadic_on(true), TriangularDyadicTail{1, Rational(1)}, std::nullopt, CertStatus::Proven};
  NormSeq b{"C.b", dyadic_on(false), TriangularDyadicTail{1, Rational(1)}, std::nullopt, CertStatus::Proven};
  return {std::move(a), std::move(b)};
}

// --- divergence -------------------------------------------------------------

DivergenceCertificate certify_divergence(const NormSeq& num, const NormSeq& den,
                                         const std::function<Rational(std::size_t)>& threshold,
                                         const std::vector<std::size_t>& ks, std::size_t depth,
                                         TailConvention convention, bool strict, Execution exec) {
  for (std::size_t k : ks) {
    if (convention == TailConvention::Inclusive && (k < 1 || depth < k))
      throw InvalidInput("inclusive tails need 1 <= k <= depth (k = " + std::to_string(k) + ")");
    if (convention == TailConvention::Exclusive && depth < k + 1)
      throw InvalidInput("exclusive tails need depth >= k + 1 (k = " + std::to_string(k) + ")");
  }
  DivergenceCertificate cert;
  cert.depth = depth;
  cert.convention = convention;
  cert.strict = strict;
  cert.records.resize(ks.size());
  detail::for_each_index(ks.size(), exec, [&](std::size_t i) {
    const std::size_t k = ks[i];
    const std::size_t from = convention == TailConvention::Inclusive ? k - 1 : k;
    DivergenceRecord r;
    r.k = k;
    r.num_lo = tail_enclosure(num, from, depth).lo;
    r.den_hi = tail_enclosure(den, from, depth).hi;
    r.threshold = threshold(k);
    if (r.den_hi == 0) {
      if (r.num_lo == 0) r.bound = Rational(0);  // 0/0 reads as 0
    } else {
      r.bound = r.num_lo / r.den_hi;
    }
    r.holds = !r.bound || (strict ? *r.bound > r.threshold : *r.bound >= r.threshold);
    cert.records[i] = std::move(r);
  });
  cert.conclusion = !cert.records.empty() &&
                    std::all_of(cert.records.begin(), cert.records.end(), [](const auto& r) { return r.holds; });
  return cert;
}

ConstructionCReport certify_C(std::size_t k_max, std::size_t depth, Execution exec) {
  if (k_max < 1) throw InvalidInput("k_max must be at least 1");
  if (depth < k_max) throw InvalidInput("depth must be at least k_max");
  const auto [a, b] = construction_C();
  std::vector<std::size_t> odd, even;
  for (std::size_t k = 1; k <= k_max; ++k) (k % 2 ? odd : even).push_back(k);
  auto two_pow = [](std::size_t k) -> Rational { return Rational(1) / pow2_neg(k); };
  ConstructionCReport report;
  report.odd = certify_divergence(a, b, two_pow, odd, depth, TailConvention::Inclusive, true, exec);
  report.conclusion = report.odd.conclusion;
  if (!even.empty()) {
    report.even = certify_divergence(b, a, two_pow, even, depth, TailConvention::Inclusive, true, exec);
    report.conclusion = report.conclusion && report.even.conclusion;
  } else {
    report.even.depth = depth;
    report.even.convention = TailConvention::Inclusive;
    report.even.conclusion = true;
  }
  return report;
}

// --- non-closedness ---------------------------------------------------------

NonClosedness non_closedness_certificate(const Rational& eps_sq, std::size_t depth_cap) {
  if (eps_sq <= 0) throw InvalidInput("epsilon must be positive");
  NonClosedness nc;
  nc.eps_sq = eps_sq;
  const Rational inv = Rational(1) / eps_sq;
  mpz_class cutoff = inv.get_num() / inv.get_den();
  if (Rational(cutoff) < inv) ++cutoff;
  if (cutoff < 1) cutoff = 1;
  if (!cutoff.fits_ulong_p() || 2 * cutoff > depth_cap)
    throw InvalidInput("epsilon too small: cutoff K = " + cutoff.get_str() + " needs depth 2K beyond the cap " +
                       std::to_string(depth_cap));
  const std::size_t K = cutoff.get_ui();
  nc.cutoff = K;
  nc.exclusion = certify_A_ratio(K, 2 * K);

  nc.telescoping_bound = Rational(1, static_cast<unsigned long>(K));
  Rational partial = 0;
  Rational telescoped = 0;
  bool termwise = true;
  for (std::size_t n = K + 1; n <= 2 * K; ++n) {
    const Rational t = inverse_power(n, 2);
    const Rational majorant(1, static_cast<unsigned long>(n * (n - 1)));
    termwise = termwise && t <= majorant;
    partial += t;
    telescoped += majorant;
  }
  const bool telescopes = telescoped == nc.telescoping_bound - Rational(1, static_cast<unsigned long>(2 * K));
  nc.residual_sq = RationalInterval(partial, nc.telescoping_bound);

  const auto [x, y] = construction_A();
  nc.increments_ok = true;
  for (std::size_t n = 1; n <= K; ++n) {
    const Rational nn(static_cast<unsigned long>(n));
    nc.increments_ok = nc.increments_ok && nn * nn * x.at(n) == y.at(n);
  }
  nc.conclusion = nc.exclusion.holds && termwise && telescopes && nc.increments_ok && nc.telescoping_bound <= eps_sq;
  return nc;
}

}  // namespace cslkit

namespace cslkit {

ConstructionBReport certify_B(std::size_t n_max) {
  ConstructionBReport report{construction_B(n_max), {}, false};
  const auto& w = report.construction.weights;
  const TailCertificate inverse_square = PowerTail{1, Rational(1), 2};
  const auto& b = report.construction;
  report.verdicts.push_back({"x", "D_mu", d_range_membership(b.x, w.mu, n_max, inverse_square)});
  report.verdicts.push_back({"x", "D_lambda", d_range_membership(b.x, w.lambda, n_max, Parity::Even)});
  report.verdicts.push_back({"y", "D_lambda", d_range_membership(b.y, w.lambda, n_max, inverse_square)});
  report.verdicts.push_back({"y", "D_mu", d_range_membership(b.y, w.mu, n_max, Parity::Odd)});
  auto inside = [](const RangeVerdict& v) { return std::holds_alternative<RangeInside>(v.membership); };
  report.conclusion = inside(report.verdicts[0]) && !inside(report.verdicts[1]) && inside(report.verdicts[2]) &&
                      !inside(report.verdicts[3]);
  return report;
}

}  // namespace cslkit
