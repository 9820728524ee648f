#include "doctest.h"

#include "cslkit/certificate_io.hpp"

using namespace cslkit;

namespace {

Json doc_A() {
  return certificate_A(certify_A_batch(12, 40), 12, 40, non_closedness_certificate(Rational(1, 20), 1000));
}
Json doc_B() { return certificate_B(certify_B(24), 24); }
Json doc_C() { return certificate_C(certify_C(15, 20), 15, 20); }

bool replays(const Json& doc) { return verify_certificate(Json::parse(doc.dump())).ok; }

}  // namespace

TEST_CASE("certificates replay after serialization") {
  for (const auto& doc : {doc_A(), doc_B(), doc_C()}) {
    const auto r = verify_certificate(Json::parse(doc.dump(2)));
    CHECK(r.ok);
    CHECK(r.failures.empty());
    CHECK(doc.at("cert_status") == "proven");
  }
}

TEST_CASE("tampered A certificates fail replay") {
  auto doc = doc_A();
  doc["records"][3]["num"] = "1/2";
  CHECK_FALSE(replays(doc));

  doc = doc_A();
  doc["records"][0]["threshold"] = "1";
  CHECK_FALSE(replays(doc));

  doc = doc_A();
  doc["records"].erase(doc["records"].size() - 1);
  CHECK_FALSE(replays(doc));

  doc = doc_A();
  doc["non_closedness"]["cutoff"] = 5;
  CHECK_FALSE(replays(doc));

  doc = doc_A();
  doc["non_closedness"]["residual_hi"] = "1/1000";
  CHECK_FALSE(replays(doc));

  doc = doc_A();
  doc["conclusion"] = false;
  CHECK_FALSE(replays(doc));
}

TEST_CASE("tampered B certificates fail replay") {
  auto doc = doc_B();
  doc["rows"][4]["lambda"] = "1";
  CHECK_FALSE(replays(doc));

  doc = doc_B();
  doc["memberships"][1]["witnesses"].erase(0);
  CHECK_FALSE(replays(doc));

  doc = doc_B();
  doc["memberships"][0]["verdict"] = "outside";
  doc["memberships"][0]["rule"] = "all";
  doc["memberships"][0]["witnesses"] = Json::array();
  CHECK_FALSE(replays(doc));
}

TEST_CASE("tampered C certificates fail replay") {
  auto doc = doc_C();
  doc["odd"]["records"][2]["bound"] = "100000";
  CHECK_FALSE(replays(doc));

  doc = doc_C();
  doc["even"]["records"][0]["den_hi"] = "1/1000000";
  CHECK_FALSE(replays(doc));

  doc = doc_C();
  doc["odd"]["convention"] = "exclusive";
  CHECK_FALSE(replays(doc));
}

TEST_CASE("malformed certificates are invalid input") {
  CHECK_THROWS_AS(verify_certificate(Json::parse("{}")), InvalidInput);
  CHECK_THROWS_AS(verify_certificate(Json::parse("[1,2]")), InvalidInput);
  auto doc = doc_A();
  doc["construction"] = "D";
  CHECK_THROWS_AS(verify_certificate(doc), InvalidInput);
  doc = doc_A();
  doc["records"][0].erase("num");
  CHECK_THROWS_AS(verify_certificate(doc), InvalidInput);
  doc = doc_C();
  doc["odd"]["records"][0]["bound"] = "x/y";
  CHECK_THROWS_AS(verify_certificate(doc), InvalidInput);
}

TEST_CASE("CSV rows follow k") {
  const std::string csv = certificate_csv(doc_C());
  CHECK(csv.rfind("k,certified_ratio_lower_bound,threshold\n", 0) == 0);
  CHECK(csv.find("\n1,") != std::string::npos);
  CHECK(csv.find("\n25,") == std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 16);

  const std::string a = certificate_csv(doc_A());
  CHECK(a.find("\n1,") != std::string::npos);
  CHECK(certificate_csv(doc_B()).find("\n2,1,1\n") != std::string::npos);
}
