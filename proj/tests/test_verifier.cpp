#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "diagalg/verifier.hpp"

using namespace diagalg;

TEST_CASE("lambda zero: two descriptions, size r+1") {
  for (int r = 2; r <= 12; ++r) {
    auto a = lambda_zero(r);
    auto b = lambda_zero_twocol(r);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK((int)a.size() == r + 1);
  }
  auto z5 = lambda_zero_twocol(5);
  std::set<Partition> want{{5}, {4, 1}, {3}, {2, 1}, {1, 1, 1}, {1}};
  CHECK(std::set<Partition>(z5.begin(), z5.end()) == want);
  auto z4 = lambda_zero_twocol(4);
  std::set<Partition> want4{{4}, {3, 1}, {2}, {1, 1}, {}};
  CHECK(std::set<Partition>(z4.begin(), z4.end()) == want4);
}

TEST_CASE("classical verification, both methods") {
  Report r4 = verify_classical(4, "both");
  INFO(r4.pretty());
  CHECK(r4.all_pass());
  Report r5 = verify_classical(5, "both");
  INFO(r5.pretty());
  CHECK(r5.all_pass());
  CHECK_THROWS(verify_classical(4, "bogus"));
}

TEST_CASE("quantum verification r = 4, 5") {
  Report r4 = verify_quantum(4);
  INFO(r4.pretty());
  CHECK(r4.all_pass());
  Report r5 = verify_quantum(5);
  INFO(r5.pretty());
  CHECK(r5.all_pass());
}

TEST_CASE("structural cross-checks") {
  Report s = verify_structure();
  INFO(s.pretty());
  CHECK(s.all_pass());
}

TEST_CASE("report serialisation") {
  Report rep = verify_classical(4, "cell-criterion");
  rep.merge(verify_structure());

  // JSON schema: {claims: [{id, anchor, expected, computed, status, millis}]}
  auto j = nlohmann::json::parse(rep.json());
  REQUIRE(j.contains("claims"));
  REQUIRE(j["claims"].is_array());
  CHECK(j["claims"].size() == rep.claims.size());
  std::string prev;
  std::set<std::string> ids;
  for (const auto& c : j["claims"]) {
    for (const char* k : {"id", "anchor", "expected", "computed", "status"})
      CHECK(c[k].is_string());
    CHECK(c["millis"].is_number());
    CHECK(c["status"] == "pass");
    std::string id = c["id"];
    CHECK(prev < id);  // sorted, and therefore each claim appears once
    prev = id;
    ids.insert(id);
  }
  CHECK(ids.size() == rep.claims.size());

  // empty report
  Report empty;
  CHECK(nlohmann::json::parse(empty.json()) ==
        nlohmann::json::parse("{\"claims\":[]}"));
  CHECK(empty.all_pass());

  // pretty output carries the verdict line
  CHECK(rep.pretty().find("all claims pass") != std::string::npos);

  // a failing claim flips the verdict
  Report bad;
  bad.claims.push_back({"x", "synthetic", "1", "2", false, 0});
  CHECK_FALSE(bad.all_pass());
  CHECK(nlohmann::json::parse(bad.json())["claims"][0]["status"] == "fail");
  CHECK(bad.pretty().find("SOME CLAIMS FAIL") != std::string::npos);
}

TEST_CASE("verification verdicts are deterministic under a fixed seed") {
  VerifyOptions a, b;
  a.seed = b.seed = 7;
  Report ra = verify_classical(5, "ideal-closure", a);
  Report rb = verify_classical(5, "ideal-closure", b);
  REQUIRE(ra.claims.size() == rb.claims.size());
  for (size_t i = 0; i < ra.claims.size(); ++i)
    CHECK(ra.claims[i].computed == rb.claims[i].computed);
}
