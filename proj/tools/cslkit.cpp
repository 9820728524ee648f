// cslkit: lattice analysis, interpolation queries and counterexample certificates.
//
// Exit codes: 0 success, 2 invalid input, 3 certificate or verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cslkit/certificate_io.hpp"
#include "cslkit/lattice_io.hpp"
#include "cslkit/report.hpp"

namespace {

using namespace cslkit;

constexpr int kExitInvalid = 2;
constexpr int kExitCertificate = 3;
constexpr std::size_t kDefaultDepthCap = 100000;

std::size_t depth_cap() {
  const char* env = std::getenv("CSLKIT_DEPTH_LIMIT");
  if (!env) return kDefaultDepthCap;
  try {
    const long long v = std::stoll(env);
    if (v < 1) throw InvalidInput("CSLKIT_DEPTH_LIMIT must be positive");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw InvalidInput(std::string("CSLKIT_DEPTH_LIMIT is not an integer: '") + env + "'");
  }
}

struct Options {
  std::string lattice_path;
  std::string symbolic;
  bool complete = false;
  bool strict = false;
  std::string x, y;
  double tol = 1e-9;
  std::string id;
  std::size_t k_max = 0;
  std::size_t depth = 0;
  std::string eps;
  std::string eps_squared;
  std::string csv_path;
  std::string json_path;
  std::string cert_path;
};

ClosureMode closure_mode(const Options& o) {
  if (o.strict && o.complete) throw InvalidInput("--strict and --complete are exclusive");
  if (o.strict) return ClosureMode::Strict;
  return o.complete ? ClosureMode::Complete : ClosureMode::Auto;
}

ParsedLattice load(const Options& o) {
  auto parsed = parse_lattice_file(o.lattice_path, closure_mode(o));
  if (!parsed.added.empty() && !o.complete) {
    std::cerr << "note: closed the member family by adding";
    for (const auto& a : parsed.added) std::cerr << ' ' << a.str();
    std::cerr << '\n';
  }
  return parsed;
}

void emit(const Report& r, const Options& o) {
  std::cout << r.text;
  if (!o.json_path.empty()) write_file(o.json_path, r.json.dump(2) + "\n");
}

int run_analyze(const Options& o) {
  if (!o.symbolic.empty()) {
    if (!o.lattice_path.empty()) throw InvalidInput("give either a lattice file or --symbolic, not both");
    emit(analyze(SymbolicNest(parse_symbolic_kind(o.symbolic))), o);
    return 0;
  }
  if (o.lattice_path.empty()) throw InvalidInput("analyze needs a lattice file or --symbolic");
  emit(analyze(load(o)), o);
  return 0;
}

int run_counterexample(const Options& o) {
  const std::size_t cap = depth_cap();
  Json cert;
  if (o.id == "A") {
    const std::size_t k_max = o.k_max ? o.k_max : 50;
    const std::size_t depth = std::min(o.depth ? o.depth : 200, cap);
    if (depth <= k_max) throw InvalidInput("depth " + std::to_string(depth) + " must exceed k_max");
    Rational eps_sq(1, 100);
    if (!o.eps.empty() && !o.eps_squared.empty()) throw InvalidInput("--eps and --eps-squared are exclusive");
    if (!o.eps.empty()) {
      const Rational eps = parse_rational(o.eps);
      eps_sq = eps * eps;
    }
    if (!o.eps_squared.empty()) eps_sq = parse_rational(o.eps_squared);
    const auto records = certify_A_batch(k_max, depth);
    cert = certificate_A(records, k_max, depth, non_closedness_certificate(eps_sq, cap));
    std::cout << "construction A: x_n = 1/n^2, y_n = n x_n on the omega nest\n";
    std::cout << "  ratio^2 >= (k+1)^2 certified for k = 1.." << k_max << " at depth " << depth << ": "
              << (cert["conclusion"] ? "yes" : "no") << '\n';
    const auto& nc = cert["non_closedness"];
    std::cout << "  non-closedness: eps^2 = " << nc["eps_squared"].get<std::string>() << ", K = "
              << nc["cutoff"].get<std::size_t>() << ", |y - T_K x|^2 <= 1/K; exclusion at k = K: ratio^2 >= (K+1)^2: "
              << (nc["exclusion"]["holds"] ? "yes" : "no") << '\n';
  } else if (o.id == "B") {
    const std::size_t n_max = std::min(o.k_max ? o.k_max : 100, cap);
    const auto report = certify_B(n_max);
    cert = certificate_B(report, n_max);
    std::cout << "construction B: ranges of D_lambda and D_mu up to n = " << n_max << '\n';
    for (const auto& m : cert["memberships"]) {
      std::cout << "  " << m["vector"].get<std::string>() << (m["verdict"] == "inside" ? " in " : " not in ")
                << "ran " << m["operator"].get<std::string>();
      if (m["verdict"] == "outside") std::cout << " (witnesses: all " << m["rule"].get<std::string>() << " n)";
      std::cout << " [" << m["status"].get<std::string>() << "]\n";
    }
  } else if (o.id == "C") {
    const std::size_t k_max = o.k_max ? o.k_max : 25;
    const std::size_t depth = std::min(o.depth ? o.depth : k_max + 10, cap);
    const auto report = certify_C(k_max, depth);
    cert = certificate_C(report, k_max, depth);
    std::cout << "construction C: alternating 2^-e_n weights, e_n = n(n+1)/2\n";
    std::cout << "  certified ratio > 2^k for k = 1.." << k_max << " (a/b at odd k, b/a at even k): "
              << (cert["conclusion"] ? "yes" : "no") << '\n';
  } else {
    throw InvalidInput("unknown construction '" + o.id + "' (expected A, B or C)");
  }

  if (!o.json_path.empty()) write_file(o.json_path, cert.dump(2) + "\n");
  if (!o.csv_path.empty()) write_file(o.csv_path, certificate_csv(cert));
  const auto check = verify_certificate(cert);
  if (!cert["conclusion"].get<bool>() || !check.ok) {
    for (const auto& f : check.failures) std::cerr << "certificate failure: " << f << '\n';
    return kExitCertificate;
  }
  return 0;
}

int run_verify(const Options& o) {
  Json doc;
  try {
    doc = Json::parse(read_file(o.cert_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed certificate: ") + e.what());
  }
  const auto result = verify_certificate(doc);
  if (!result.ok) {
    for (const auto& f : result.failures) std::cout << "FAIL " << f << '\n';
    return kExitCertificate;
  }
  std::cout << "certificate " << doc.value("construction", "?") << " verified ("
            << doc.value("cert_status", "?") << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cslkit: commutative subspace lattices, nest-algebra interpolation and certified counterexamples"};
  app.require_subcommand(1);
  Options o;

  auto add_lattice = [&o](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("lattice", o.lattice_path, "lattice file {\"dimension\": d, \"members\": [...]}");
    if (required) opt->required();
    cmd->add_flag("--complete", o.complete, "close the member family under meet and join");
    cmd->add_flag("--strict", o.strict, "reject a family that is not closed");
    cmd->add_option("--json", o.json_path, "write the machine-readable report here");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "report the lattice conditions");
  add_lattice(analyze_cmd, false);
  analyze_cmd->add_option("--symbolic", o.symbolic, "omega | omega-star");

  auto* lance_cmd = app.add_subcommand("lance", "exact Lance supremum for x -> y");
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit manifold M_x");
  auto* rank_cmd = app.add_subcommand("rank-one", "rank-one interpolant in Alg L");
  auto* interp_cmd = app.add_subcommand("interpolate", "greedy and minimum-norm interpolants");
  for (auto* cmd : {lance_cmd, orbit_cmd, rank_cmd, interp_cmd}) {
    add_lattice(cmd, true);
    cmd->add_option("--x", o.x, "vector: \"1,1/2,0\" or a JSON array")->required();
  }
  for (auto* cmd : {lance_cmd, rank_cmd, interp_cmd}) cmd->add_option("--y", o.y, "target vector")->required();
  interp_cmd->add_option("--tol", o.tol, "min-norm solver tolerance");

  auto* ce_cmd = app.add_subcommand("counterexample", "certify construction A, B or C");
  ce_cmd->add_option("id", o.id, "A | B | C")->required();
  ce_cmd->add_option("--kmax", o.k_max, "largest certified index");
  ce_cmd->add_option("--depth", o.depth, "working depth K for partial sums");
  ce_cmd->add_option("--eps", o.eps, "approximation radius for the non-closedness bundle (A)");
  ce_cmd->add_option("--eps-squared", o.eps_squared, "squared approximation radius (A)");
  ce_cmd->add_option("--csv", o.csv_path, "CSV of k, certified lower bound, threshold");
  ce_cmd->add_option("--json", o.json_path, "certificate output path");

  auto* verify_cmd = app.add_subcommand("verify", "replay a serialized certificate");
  verify_cmd->add_option("certificate", o.cert_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*analyze_cmd) return run_analyze(o);
    if (*lance_cmd) return emit(lance_report(load(o).lattice, parse_vector(o.x), parse_vector(o.y)), o), 0;
    if (*orbit_cmd) return emit(orbit_report(load(o).lattice, parse_vector(o.x)), o), 0;
    if (*rank_cmd) return emit(rank_one_report(load(o).lattice, parse_vector(o.x), parse_vector(o.y)), o), 0;
    if (*interp_cmd) {
      if (!(o.tol > 0)) throw InvalidInput("--tol must be positive");
      emit(interpolate_report(load(o).lattice, parse_vector(o.x), parse_vector(o.y), o.tol), o);
      return 0;
    }
    if (*ce_cmd) return run_counterexample(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const CertificateFailure& e) {
    std::cerr << "certificate failure: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
