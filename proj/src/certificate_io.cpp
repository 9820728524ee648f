#include "cslkit/certificate_io.hpp"

#include <sstream>

namespace cslkit {

namespace {

constexpr const char* kFormat = "cslkit-certificate";

Json header(const char* construction) {
  Json doc;
  doc["format"] = kFormat;
  doc["version"] = 1;
  doc["construction"] = construction;
  doc["cert_status"] = to_string(CertStatus::Proven);
  return doc;
}

Json a_record(const ARatioCheck& c) {
  return Json{{"k", c.k},
              {"depth", c.depth},
              {"num", to_string(c.num)},
              {"den", to_string(c.den)},
              {"ratio", to_string(c.ratio)},
              {"threshold", to_string(c.threshold)},
              {"holds", c.holds}};
}

Json divergence_json(const DivergenceCertificate& cert, const char* num, const char* den) {
  Json records = Json::array();
  for (const auto& r : cert.records)
    records.push_back(Json{{"k", r.k},
                           {"num_lo", to_string(r.num_lo)},
                           {"den_hi", to_string(r.den_hi)},
                           {"bound", r.bound ? Json(to_string(*r.bound)) : Json("inf")},
                           {"threshold", to_string(r.threshold)},
                           {"holds", r.holds}});
  return Json{{"numerator", num},
              {"denominator", den},
              {"convention", cert.convention == TailConvention::Inclusive ? "inclusive" : "exclusive"},
              {"strict", cert.strict},
              {"depth", cert.depth},
              {"records", std::move(records)},
              {"conclusion", cert.conclusion}};
}

Json membership_json(const RangeVerdict& v) {
  Json j{{"vector", v.vector}, {"operator", v.operator_}};
  if (const auto* in = std::get_if<RangeInside>(&v.membership)) {
    j["verdict"] = "inside";
    j["reference"] = describe(in->reference);
    const auto& p = std::get<PowerTail>(in->reference);
    j["reference_scale"] = to_string(p.scale);
    j["reference_power"] = p.power;
    j["status"] = to_string(in->status);
  } else {
    const auto& out = std::get<RangeOutside>(v.membership);
    j["verdict"] = "outside";
    j["rule"] = to_string(out.rule);
    j["witnesses"] = out.witnesses;
    j["status"] = to_string(out.status);
  }
  return j;
}

Rational field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw InvalidInput(std::string("certificate field '") + key + "' missing");
  return parse_rational(j.at(key).get<std::string>());
}

std::size_t index_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw InvalidInput(std::string("certificate field '") + key + "' missing");
  return j.at(key).get<std::size_t>();
}

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) result_.failures.push_back(what);
  }
  VerifyResult finish() {
    result_.ok = result_.failures.empty();
    return std::move(result_);
  }

 private:
  VerifyResult result_;
};

void verify_a_record(Checker& chk, const Json& r, const std::string& where) {
  const std::size_t k = index_field(r, "k");
  const std::size_t depth = index_field(r, "depth");
  const Rational num = field(r, "num"), den = field(r, "den"), ratio = field(r, "ratio"), thr = field(r, "threshold");
  chk.expect(depth > k, where + ": depth must exceed k");
  Rational sum2 = 0, sum4 = 0;
  for (std::size_t n = k + 1; n <= depth; ++n) {
    sum2 += inverse_power(n, 2);
    sum4 += inverse_power(n, 4);
  }
  chk.expect(num == sum2, where + ": numerator is not sum n^-2");
  chk.expect(den == sum4, where + ": denominator is not sum n^-4");
  chk.expect(den != 0 && ratio == num / den, where + ": ratio != num/den");
  chk.expect(thr == Rational((k + 1) * (k + 1)), where + ": threshold != (k+1)^2");
  chk.expect(ratio >= thr, where + ": ratio below threshold");
}

void verify_c_block(Checker& chk, const Json& block, bool odd) {
  const std::string name = odd ? "odd" : "even";
  const std::size_t depth = index_field(block, "depth");
  auto term = [](bool odd_terms, std::size_t n) {
    return (n % 2 == 1) == odd_terms ? pow2_neg(triangular_e(n)) : Rational(0);
  };
  chk.expect(block.value("convention", "") == "inclusive", name + ": convention must be inclusive");
  chk.expect(block.value("strict", false), name + ": comparison must be strict");
  for (const auto& r : block.at("records")) {
    const std::size_t k = index_field(r, "k");
    const std::string where = name + " k=" + std::to_string(k);
    chk.expect((k % 2 == 1) == odd, where + ": parity mismatch");
    chk.expect(k >= 1 && k <= depth, where + ": k out of range");
    if (k < 1 || k > depth) continue;
    Rational num = 0, den = 0;
    for (std::size_t n = k; n <= depth; ++n) {
      num += term(odd, n);
      den += term(!odd, n);
    }
    den += dyadic_tail_bound(depth);
    const Rational num_lo = field(r, "num_lo"), den_hi = field(r, "den_hi"), bound = field(r, "bound");
    chk.expect(num_lo == num, where + ": numerator partial sum mismatch");
    chk.expect(den_hi == den, where + ": denominator enclosure mismatch");
    chk.expect(den_hi > 0 && bound == num_lo / den_hi, where + ": bound != num_lo/den_hi");
    chk.expect(field(r, "threshold") == Rational(1) / pow2_neg(k), where + ": threshold != 2^k");
    chk.expect(bound > field(r, "threshold"), where + ": bound does not exceed 2^k");
  }
}

}  // namespace

Json certificate_A(const std::vector<ARatioCheck>& records, std::size_t k_max, std::size_t depth,
                   const std::optional<NonClosedness>& non_closed) {
  Json doc = header("A");
  doc["parameters"] = Json{{"k_max", k_max}, {"depth", depth}};
  doc["claim"] = "|F_k^perp y|^2 / |F_k^perp x|^2 >= (k+1)^2, so y is not in M_x";
  Json recs = Json::array();
  bool all = !records.empty();
  for (const auto& r : records) {
    recs.push_back(a_record(r));
    all = all && r.holds;
  }
  doc["records"] = std::move(recs);
  if (non_closed) {
    const auto& nc = *non_closed;
    doc["parameters"]["eps_squared"] = to_string(nc.eps_sq);
    doc["non_closedness"] = Json{{"eps_squared", to_string(nc.eps_sq)},
                                 {"cutoff", nc.cutoff},
                                 {"exclusion", a_record(nc.exclusion)},
                                 {"residual_lo", to_string(nc.residual_sq.lo)},
                                 {"residual_hi", to_string(nc.residual_sq.hi)},
                                 {"telescoping_bound", to_string(nc.telescoping_bound)},
                                 {"approximant", "T_K = sum_{n<=K} n (F_n - F_{n-1})"},
                                 {"conclusion", nc.conclusion}};
    all = all && nc.conclusion;
  }
  doc["conclusion"] = all;
  return doc;
}

Json certificate_B(const ConstructionBReport& report, std::size_t n_max) {
  Json doc = header("B");
  doc["parameters"] = Json{{"n_max", n_max}};
  doc["note"] = "ratio constraints are tight at some indices; witnesses use >= 1";
  Json rows = Json::array();
  const auto& w = report.construction.weights;
  for (std::size_t n = 1; n <= n_max; ++n)
    rows.push_back(Json{{"n", n},
                        {"lambda", to_string(w.lambda[n])},
                        {"mu", to_string(w.mu[n])},
                        {"x_sq", to_string(report.construction.x.at(n))},
                        {"y_sq", to_string(report.construction.y.at(n))}});
  doc["rows"] = std::move(rows);
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(membership_json(v));
  doc["memberships"] = std::move(verdicts);
  doc["conclusion"] = report.conclusion;
  return doc;
}

Json certificate_C(const ConstructionCReport& report, std::size_t k_max, std::size_t depth) {
  Json doc = header("C");
  doc["parameters"] = Json{{"k_max", k_max}, {"depth", depth}};
  doc["claim"] = "sum_{n>=k} a_n / sum_{n>=k} b_n > 2^k for odd k, reversed for even k";
  doc["odd"] = divergence_json(report.odd, "a", "b");
  doc["even"] = divergence_json(report.even, "b", "a");
  doc["conclusion"] = report.conclusion;
  return doc;
}

VerifyResult verify_certificate(const Json& doc) {
  if (!doc.is_object() || doc.value("format", "") != kFormat) throw InvalidInput("not a cslkit certificate");
  const std::string id = doc.value("construction", "");
  Checker chk;
  try {
    if (id == "A") {
      const std::size_t k_max = index_field(doc.at("parameters"), "k_max");
      const auto& recs = doc.at("records");
      chk.expect(recs.size() == k_max, "expected one record per k <= k_max");
      for (std::size_t i = 0; i < recs.size(); ++i) {
        chk.expect(index_field(recs[i], "k") == i + 1, "records must run k = 1..k_max");
        verify_a_record(chk, recs[i], "k=" + std::to_string(i + 1));
      }
      if (doc.contains("non_closedness")) {
        const auto& nc = doc.at("non_closedness");
        const Rational eps_sq = field(nc, "eps_squared");
        const std::size_t K = index_field(nc, "cutoff");
        chk.expect(K >= 1, "cutoff must be positive");
        const Rational tele = field(nc, "telescoping_bound");
        chk.expect(K >= 1 && tele == Rational(1, static_cast<unsigned long>(K)), "telescoping bound != 1/K");
        chk.expect(tele <= eps_sq, "1/K exceeds eps^2");
        chk.expect(field(nc, "residual_hi") == tele, "residual enclosure must end at 1/K");
        Rational lo = 0;
        for (std::size_t n = K + 1; n <= 2 * K; ++n) lo += inverse_power(n, 2);
        chk.expect(field(nc, "residual_lo") == lo, "residual lower end != sum_{K<n<=2K} n^-2");
        const auto& ex = nc.at("exclusion");
        chk.expect(index_field(ex, "k") == K, "exclusion must sit at k = K");
        verify_a_record(chk, ex, "exclusion");
      }
    } else if (id == "B") {
      const std::size_t n_max = index_field(doc.at("parameters"), "n_max");
      const auto& rows = doc.at("rows");
      chk.expect(rows.size() == n_max, "expected one row per n <= n_max");
      std::vector<Rational> lambda{Rational(1)}, mu{Rational(1)}, xs{Rational(0)}, ys{Rational(0)};
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const std::size_t n = index_field(r, "n");
        chk.expect(n == i + 1, "rows must run n = 1..n_max");
        lambda.push_back(field(r, "lambda"));
        mu.push_back(field(r, "mu"));
        xs.push_back(field(r, "x_sq"));
        ys.push_back(field(r, "y_sq"));
        const Rational nn(static_cast<unsigned long>(n));
        const std::string where = "n=" + std::to_string(n);
        chk.expect(lambda[n] > 0 && mu[n] > 0, where + ": weights must be positive");
        chk.expect(lambda[n] < lambda[n - 1] && mu[n] < mu[n - 1], where + ": weights must strictly decrease");
        if (n % 2 == 0)
          chk.expect(mu[n] >= nn * lambda[n], where + ": mu/lambda < n at even n");
        else
          chk.expect(lambda[n] >= nn * mu[n], where + ": lambda/mu < n at odd n");
        chk.expect(xs[n] * nn * nn == mu[n] * mu[n], where + ": |x_n| != mu_n/n");
        chk.expect(ys[n] * nn * nn == lambda[n] * lambda[n], where + ": |y_n| != lambda_n/n");
      }
      const auto& ms = doc.at("memberships");
      chk.expect(ms.size() == 4, "expected four membership verdicts");
      for (const auto& m : ms) {
        const bool is_x = m.at("vector") == "x";
        const bool is_lambda = m.at("operator") == "D_lambda";
        const auto& s = is_x ? xs : ys;
        const auto& delta = is_lambda ? lambda : mu;
        const std::string where = m.at("vector").get<std::string>() + " vs " + m.at("operator").get<std::string>();
        const bool expect_inside = is_x != is_lambda;
        if (m.at("verdict") == "inside") {
          chk.expect(expect_inside, where + ": inside verdict contradicts the construction");
          const Rational c = field(m, "reference_scale");
          const auto p = m.at("reference_power").get<unsigned long>();
          for (std::size_t n = 1; n < s.size(); ++n)
            chk.expect(s[n] / (delta[n] * delta[n]) <= c * inverse_power(n, p), where + ": reference bound fails");
        } else {
          chk.expect(!expect_inside, where + ": outside verdict contradicts the construction");
          const std::string rule = m.at("rule");
          std::vector<std::size_t> expected;
          for (std::size_t n = 1; n < s.size(); ++n)
            if (rule == "all" || (rule == "even") == (n % 2 == 0)) expected.push_back(n);
          chk.expect(m.at("witnesses").get<std::vector<std::size_t>>() == expected, where + ": witness set incomplete");
          for (std::size_t n : expected)
            chk.expect(s[n] >= delta[n] * delta[n], where + ": witness term below 1 at n=" + std::to_string(n));
        }
      }
    } else if (id == "C") {
      const std::size_t k_max = index_field(doc.at("parameters"), "k_max");
      verify_c_block(chk, doc.at("odd"), true);
      verify_c_block(chk, doc.at("even"), false);
      chk.expect(doc.at("odd").at("records").size() + doc.at("even").at("records").size() == k_max,
                 "expected one record per k <= k_max");
    } else {
      throw InvalidInput("unknown construction '" + id + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
  chk.expect(doc.value("conclusion", false), "certificate does not claim its conclusion");
  return chk.finish();
}

std::string certificate_csv(const Json& doc) {
  std::ostringstream os;
  os << "k,certified_ratio_lower_bound,threshold\n";
  const std::string id = doc.at("construction");
  auto row = [&os](std::size_t k, const std::string& bound, const Rational& thr) {
    os << k << ',' << bound << ',' << to_decimal(thr) << '\n';
  };
  if (id == "A") {
    for (const auto& r : doc.at("records"))
      row(r.at("k"), to_decimal(parse_rational(r.at("ratio").get<std::string>())),
          parse_rational(r.at("threshold").get<std::string>()));
  } else if (id == "C") {
    std::vector<std::pair<std::size_t, const Json*>> all;
    for (const char* block : {"odd", "even"})
      for (const auto& r : doc.at(block).at("records")) all.emplace_back(r.at("k").get<std::size_t>(), &r);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, r] : all) {
      const std::string b = r->at("bound");
      row(k, b == "inf" ? "inf" : to_decimal(parse_rational(b)), parse_rational(r->at("threshold").get<std::string>()));
    }
  } else if (id == "B") {
    // |x_n / lambda_n|^2 at even n, |y_n / mu_n|^2 at odd n: the exclusion witnesses
    for (const auto& r : doc.at("rows")) {
      const std::size_t n = r.at("n");
      const bool even = n % 2 == 0;
      const Rational s = parse_rational(r.at(even ? "x_sq" : "y_sq").get<std::string>());
      const Rational w = parse_rational(r.at(even ? "lambda" : "mu").get<std::string>());
      row(n, to_decimal(s / (w * w)), Rational(1));
    }
  }
  return os.str();
}

}  // namespace cslkit
