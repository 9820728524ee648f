#pragma once

// Self-contained JSON certificates. Every bound is stored as an exact "p/q"
// string; verify_certificate replays the claims from the stored values and
// the closed-form term formulas without rebuilding any construction.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cslkit/certify.hpp"

namespace cslkit {

using Json = nlohmann::ordered_json;

Json certificate_A(const std::vector<ARatioCheck>& records, std::size_t k_max, std::size_t depth,
                   const std::optional<NonClosedness>& non_closed);
Json certificate_B(const ConstructionBReport& report, std::size_t n_max);
Json certificate_C(const ConstructionCReport& report, std::size_t k_max, std::size_t depth);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Throws InvalidInput for documents that are not certificates.
VerifyResult verify_certificate(const Json& doc);

/// One row per certified index: k, decimal lower bound, decimal threshold.
std::string certificate_csv(const Json& doc);

}  // namespace cslkit
