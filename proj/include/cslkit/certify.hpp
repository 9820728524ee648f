#pragma once

// Exact certificates for the three counterexample constructions on the
// OmegaNest 0 = F_0 < F_1 < F_2 < ...
//
//   A  |x_n| = 1/n^2, y_n = n x_n: y lies in the closure of M_x but not in M_x.
//   B  x_n, y_n scaled by decreasing weights mu, lambda: ran D_lambda and
//      ran D_mu are not ordered by inclusion.
//   C  |x_n|^2 = a_n, |y_n|^2 = b_n with alternating 2^(-e_n): M_x and M_y are
//      not ordered by inclusion.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <optional>
#include <variant>
#include <vector>

#include "cslkit/norm_seq.hpp"
#include "cslkit/parallel.hpp"

namespace cslkit {

// --- construction A -------------------------------------------------------

struct SequencePair {
  NormSeq x;
  NormSeq y;
};

/// x: s_n = n^-4, y: s_n = n^-2.
SequencePair construction_A();

struct ARatioCheck {
  std::size_t k = 0;
  std::size_t depth = 0;
  Rational num;        ///< sum_{k<n<=K} n^-2
  Rational den;        ///< sum_{k<n<=K} n^-4
  Rational ratio;      ///< num / den
  Rational threshold;  ///< (k+1)^2
  bool holds = false;
};

/// Partial sums suffice: n^2 >= (k+1)^2 termwise for n > k, so the partial
/// ratio bounds the full ratio |F_k^perp y|^2 / |F_k^perp x|^2 from below.
ARatioCheck certify_A_ratio(std::size_t k, std::size_t depth);

/// certify_A_ratio for k = 1..k_max at a fixed depth.
std::vector<ARatioCheck> certify_A_batch(std::size_t k_max, std::size_t depth, Execution exec = Execution::Parallel);

// --- construction B -------------------------------------------------------

/// lambda[n], mu[n] for n = 0..n_max with lambda[0] = mu[0] = 1.
struct LambdaMu {
  std::vector<Rational> lambda;
  std::vector<Rational> mu;
};

LambdaMu lambda_mu_sequences(std::size_t n_max);

struct ConstructionB {
  LambdaMu weights;
  NormSeq x;  ///< s_n = (mu_n / n)^2
  NormSeq y;  ///< s_n = (lambda_n / n)^2
};

ConstructionB construction_B(std::size_t n_max);

enum class Parity { Even, Odd, All };
std::string to_string(Parity p);

/// x is in ran D_delta: t_n = s_n / delta_n^2 is dominated by a summable reference.
struct RangeInside {
  TailCertificate reference;
  CertStatus status = CertStatus::Asserted;
  std::size_t checked_to = 0;
};

/// x is not in ran D_delta: t_n >= 1 along an infinite index class.
struct RangeOutside {
  Parity rule = Parity::All;
  std::vector<std::size_t> witnesses;
  std::vector<Rational> witness_terms;
  CertStatus status = CertStatus::Asserted;
};

using RangeMembership = std::variant<RangeInside, RangeOutside>;

/// Optional structural claim to check instead of searching for one.
using MembershipHint = std::variant<std::monostate, TailCertificate, Parity>;

/// Decides membership of the symbolic vector `s` in the range of
/// D_delta = sum delta_n (F_n - F_{n-1}); delta[0] is unused. A hint verified
/// on n <= n_max yields a proven verdict; a discovered rule is only asserted.
RangeMembership d_range_membership(const NormSeq& s, const std::vector<Rational>& delta, std::size_t n_max,
                                   const MembershipHint& hint = std::monostate{}, CertStatus hint_status = CertStatus::Proven);

struct RangeVerdict {
  std::string vector;    ///< "x" or "y"
  std::string operator_; ///< "D_lambda" or "D_mu"
  RangeMembership membership;
};

struct ConstructionBReport {
  ConstructionB construction;
  std::vector<RangeVerdict> verdicts;  ///< x|D_mu, x|D_lambda, y|D_lambda, y|D_mu
  bool conclusion = false;             ///< mutual non-inclusion of the two ranges
};

/// Range memberships of construction B up to n_max, checked against the
/// structural rules the construction guarantees.
ConstructionBReport certify_B(std::size_t n_max);

// --- construction C -------------------------------------------------------

/// a_n = 2^(-e_n) at odd n, 0 at even n; b_n the reverse.
SequencePair construction_C();

// --- divergence -----------------------------------------------------------

/// Which tail a record at index k refers to.
enum class TailConvention {
  Exclusive,  ///< sum_{n>k}, i.e. |F_k^perp x|^2
  Inclusive,  ///< sum_{n>=k}, i.e. |F_{k-1}^perp x|^2
};

struct DivergenceRecord {
  std::size_t k = 0;
  Rational num_lo;
  Rational den_hi;
  std::optional<Rational> bound;  ///< num_lo / den_hi, nullopt for a zero denominator
  Rational threshold;
  bool holds = false;
};

struct DivergenceCertificate {
  std::vector<DivergenceRecord> records;
  std::size_t depth = 0;
  TailConvention convention = TailConvention::Exclusive;
  bool strict = true;
  bool conclusion = false;
};

/// For each k, certifies lo(num tail) / hi(den tail) against g(k); the
/// conclusion holds when every record clears its threshold.
DivergenceCertificate certify_divergence(const NormSeq& num, const NormSeq& den,
                                         const std::function<Rational(std::size_t)>& threshold,
                                         const std::vector<std::size_t>& ks, std::size_t depth,
                                         TailConvention convention, bool strict,
                                         Execution exec = Execution::Parallel);

struct ConstructionCReport {
  DivergenceCertificate odd;   ///< num = a, den = b, odd k
  DivergenceCertificate even;  ///< num = b, den = a, even k
  bool conclusion = false;
};

/// Certified ratio > 2^k for all k <= k_max, alternating numerator by parity.
ConstructionCReport certify_C(std::size_t k_max, std::size_t depth, Execution exec = Execution::Parallel);

// --- non-closedness -------------------------------------------------------

struct NonClosedness {
  Rational eps_sq;
  std::size_t cutoff = 0;          ///< K with 1/K <= eps^2
  ARatioCheck exclusion;           ///< certify_A_ratio(K, 2K)
  RationalInterval residual_sq;    ///< encloses |y - T_K x|^2 = sum_{n>K} n^-2
  Rational telescoping_bound;      ///< 1/K
  bool increments_ok = false;      ///< |n x_n|^2 = |y_n|^2 for n <= K
  bool conclusion = false;
};

/// y is approximated by T_K x with T_K = sum_{n<=K} n (F_n - F_{n-1}) in Alg L,
/// while the exclusion certificate keeps y outside M_x.
NonClosedness non_closedness_certificate(const Rational& eps_sq, std::size_t depth_cap);

}  // namespace cslkit
