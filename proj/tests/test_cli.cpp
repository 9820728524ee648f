#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cslkit/certificate_io.hpp"
#include "cslkit/lattice_io.hpp"

#ifndef CSLKIT_CLI
#error "CSLKIT_CLI must name the cslkit executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto p = fs::temp_directory_path() / ("cslkit-cli-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(CSLKIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string file(const std::string& name, const std::string& content) {
  const auto p = scratch() / name;
  std::ofstream(p) << content;
  return p.string();
}

std::string slurp(const std::string& path) { return cslkit::read_file(path); }

const std::string kChain3 = R"({"dimension":3,"members":[[],[0],[0,1],[0,1,2]]})";
const std::string kDiamond = R"({"dimension":2,"members":[[],[0],[1],[0,1]]})";

}  // namespace

TEST_CASE("cli analyze") {
  const auto chain = file("chain3.json", kChain3);
  auto r = run("analyze " + chain);
  CHECK(r.code == 0);
  CHECK(r.out.find("{0,1,2} -> {0,1}\n") != std::string::npos);
  CHECK(r.out.find("{0,1} -> {0}\n") != std::string::npos);
  CHECK(r.out.find("{0} -> {}\n") != std::string::npos);

  const auto json = (scratch() / "diamond-report.json").string();
  r = run("analyze " + file("diamond.json", kDiamond) + " --json " + json);
  CHECK(r.code == 0);
  const auto doc = cslkit::Json::parse(slurp(json));
  CHECK(doc.at("nest") == false);
  CHECK(doc.at("conditions").at("hyperatomic") == true);
  CHECK(doc.at("orbit_order").at("total") == false);
  CHECK(doc.at("orbit_order").contains("witness"));

  const auto omega_json = (scratch() / "omega.json").string();
  r = run("analyze --symbolic omega --json " + omega_json);
  CHECK(r.code == 0);
  const auto omega = cslkit::Json::parse(slurp(omega_json));
  CHECK(omega.at("conditions").at("hyperatomic") == false);
  CHECK(omega.at("non_stabilizing_chain").size() > 1);
  CHECK(omega.at("hyperatomic_witness") == "I");
  CHECK(r.out.find("F_1") != std::string::npos);

  r = run("analyze --symbolic omega-star");
  CHECK(r.code == 0);
  CHECK(run("analyze --symbolic kappa").code == 2);
}

TEST_CASE("cli closure flags") {
  const auto open = file("open.json", R"({"dimension":2,"members":[[0],[1]]})");
  CHECK(run("analyze " + open + " --strict").code == 2);
  CHECK(run("analyze " + open + " --complete").code == 0);
  CHECK(run("analyze " + open).code == 0);
  CHECK(run("analyze " + open + " --strict --complete").code == 2);
  CHECK(run("analyze " + file("bad.json", "{\"dimension\":2")).code == 2);
  CHECK(run("analyze " + (scratch() / "missing.json").string()).code == 2);
}

TEST_CASE("cli lance, orbit, rank-one, interpolate") {
  const auto chain = file("chain3q.json", kChain3);
  const auto json = (scratch() / "lance.json").string();
  auto r = run("lance " + chain + " --x 1,1,1 --y 0,0,1 --json " + json);
  CHECK(r.code == 0);
  auto doc = cslkit::Json::parse(slurp(json));
  CHECK(doc.at("finite") == true);
  CHECK(doc.at("value_squared") == "1");
  CHECK(doc.at("witness") == cslkit::Json::array({0, 1}));

  r = run("lance " + chain + " --x 1,0,0 --y 0,0,1 --json " + json);
  CHECK(r.code == 0);
  doc = cslkit::Json::parse(slurp(json));
  CHECK(doc.at("finite") == false);
  CHECK(doc.at("witness") == cslkit::Json::array({0, 1}));

  CHECK(run("lance " + chain + " --x 1,1 --y 0,0,1").code == 2);
  CHECK(run("lance " + chain + " --x 1,1,a --y 0,0,1").code == 2);
  CHECK(run("orbit " + chain + " --x 0,1,0").code == 0);
  CHECK(run("rank-one " + chain + " --x 1,0,0 --y 1,1,0").code == 0);

  r = run("interpolate " + chain + " --x 1,1,1 --y 1,1,1 --json " + json);
  CHECK(r.code == 0);
  doc = cslkit::Json::parse(slurp(json));
  CHECK(doc.at("identity_interpolates") == true);

  r = run("interpolate " + chain + " --x 1,2,3 --y 3,-1,1/2 --json " + json);
  CHECK(r.code == 0);
  doc = cslkit::Json::parse(slurp(json));
  CHECK(doc.at("sandwich").at("lance_le_greedy_opnorm") == true);
  CHECK(doc.at("sandwich").at("greedy_opnorm_le_bound") == true);

  CHECK(run("interpolate " + chain + " --x 1,0,0 --y 0,0,1").code == 0);
  CHECK(run("interpolate " + chain + " --x 1,1,1 --y 1,1,1 --tol -1").code == 2);
}

TEST_CASE("cli counterexamples, csv and verify") {
  const auto a_json = (scratch() / "A.json").string();
  const auto a_csv = (scratch() / "A.csv").string();
  auto r = run("counterexample A --kmax 50 --depth 200 --json " + a_json + " --csv " + a_csv);
  CHECK(r.code == 0);
  const std::string csv = slurp(a_csv);
  CHECK(csv.rfind("k,certified_ratio_lower_bound,threshold\n", 0) == 0);
  CHECK(csv.find("\n50,") != std::string::npos);
  CHECK(run("verify " + a_json).code == 0);

  // determinism: byte-identical outputs on a rerun
  const auto a_json2 = (scratch() / "A2.json").string();
  const auto a_csv2 = (scratch() / "A2.csv").string();
  auto r2 = run("counterexample A --kmax 50 --depth 200 --json " + a_json2 + " --csv " + a_csv2);
  CHECK(r2.out == r.out);
  CHECK(slurp(a_json2) == slurp(a_json));
  CHECK(slurp(a_csv2) == csv);

  const auto b_json = (scratch() / "B.json").string();
  r = run("counterexample B --json " + b_json);
  CHECK(r.code == 0);
  CHECK(r.out.find("x in ran D_mu") != std::string::npos);
  CHECK(r.out.find("x not in ran D_lambda") != std::string::npos);
  CHECK(r.out.find("y in ran D_lambda") != std::string::npos);
  CHECK(r.out.find("y not in ran D_mu") != std::string::npos);
  CHECK(run("verify " + b_json).code == 0);

  const auto c_json = (scratch() / "C.json").string();
  CHECK(run("counterexample C --kmax 25 --json " + c_json).code == 0);
  CHECK(run("verify " + c_json).code == 0);

  auto doc = cslkit::Json::parse(slurp(c_json));
  doc["odd"]["records"][0]["num_lo"] = "1";
  const auto tampered = file("C-tampered.json", doc.dump());
  CHECK(run("verify " + tampered).code == 3);
  CHECK(run("verify " + file("junk.json", "not json")).code == 2);

  CHECK(run("counterexample D").code == 2);
  CHECK(run("counterexample A --kmax 10 --depth 10").code == 2);
  CHECK(run("counterexample A --eps 1/1000", "CSLKIT_DEPTH_LIMIT=100").code == 2);
  CHECK(run("counterexample A --eps 1/10", "CSLKIT_DEPTH_LIMIT=1000").code == 0);
  CHECK(run("counterexample A", "CSLKIT_DEPTH_LIMIT=zero").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}
