#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>

#include "diagalg.h"

// Everything here goes through the shared library boundary only.

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  da_free_string(s);
  return out;
}

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::string(da_version()).rfind("diagalg", 0) == 0);

  char* s = (char*)"sentinel";
  CHECK(da_dim_end(0, 3, &s) == DA_ERR_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::string(da_last_error()).size() > 0);

  CHECK(da_dim_end(2, 3, nullptr) == DA_ERR_ARGUMENT);

  long v = -1;
  CHECK(da_radical_dim(4, "bogus", nullptr, &v) == DA_ERR_ARGUMENT);
  CHECK(std::string(da_last_error()).find("bogus") != std::string::npos);
  CHECK(da_radical_dim(4, nullptr, nullptr, &v) == DA_ERR_ARGUMENT);

  da_free_string(nullptr);  // must be a no-op
}

TEST_CASE("endomorphism dimensions and multiplicity tables") {
  char* s = nullptr;
  CHECK(da_dim_end(2, 0, &s) == DA_OK);
  CHECK(take(s) == "1");
  CHECK(da_dim_end(2, 4, &s) == DA_OK);
  CHECK(take(s) == "91");
  CHECK(da_dim_end(2, 5, &s) == DA_OK);
  CHECK(take(s) == "603");
  CHECK(da_dim_end(2, 6, &s) == DA_OK);
  CHECK(take(s) == "4213");
  // n = 1 gives Temperley-Lieb dimensions: Catalan numbers
  CHECK(da_dim_end(1, 5, &s) == DA_OK);
  CHECK(take(s) == "42");

  CHECK(da_mult_table(2, 4, "tsv", &s) == DA_OK);
  std::string tsv = take(s);
  CHECK(tsv.find('\t') != std::string::npos);
  CHECK(da_mult_table(2, 4, "json", &s) == DA_OK);
  auto j = nlohmann::json::parse(take(s));
  CHECK(j.is_object());
  CHECK(da_mult_table(2, 4, "xml", &s) == DA_ERR_ARGUMENT);
  CHECK(s == nullptr);
}

TEST_CASE("radical and simple dimensions") {
  da_options opt{7, 0, 2, 0};
  long v = -1;
  CHECK(da_radical_dim(4, "classical", &opt, &v) == DA_OK);
  CHECK(v == 0);
  CHECK(da_radical_dim(5, "classical", &opt, &v) == DA_OK);
  CHECK(v == 239);
  CHECK(da_radical_dim(4, "quantum", &opt, &v) == DA_OK);
  CHECK(v == 0);
  CHECK(da_radical_dim(5, "quantum", &opt, &v) == DA_OK);
  CHECK(v == 239);

  char* s = nullptr;
  CHECK(da_simple_dims(5, "quantum", &opt, &s) == DA_OK);
  std::string rep = take(s);
  CHECK(rep.find("2,1") != std::string::npos);
  CHECK(rep.find("1,1,1") != std::string::npos);
}

TEST_CASE("gram matrices") {
  char* s = nullptr;
  CHECK(da_gram(4, "2", "classical", "tsv", &s) == DA_OK);
  std::string tsv = take(s);
  CHECK(tsv.find('\t') != std::string::npos);

  CHECK(da_gram(3, "1", "quantum", "json", &s) == DA_OK);
  auto j = nlohmann::json::parse(take(s));
  CHECK(j["rows"] == j["cols"]);
  CHECK(j["mode"] == "quantum");
  CHECK(j["entries"].size() == j["rows"]);

  // |lambda| has the wrong parity for r = 4
  CHECK(da_gram(4, "1", "classical", "tsv", &s) == DA_ERR_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(da_gram(4, "nonsense", "classical", "tsv", &s) == DA_ERR_ARGUMENT);
}

TEST_CASE("ideal and quotient dimensions at r = 4") {
  da_options opt{3, 0, 2, 0};
  long v = -1;
  CHECK(da_ideal_dim(4, "classical", &opt, &v) == DA_OK);
  CHECK(v == 14);
  CHECK(da_ideal_dim(4, "quantum", &opt, &v) == DA_OK);
  CHECK(v == 14);
  CHECK(da_p_r_dim(4, "classical", &opt, &v) == DA_OK);
  CHECK(v == 91);
  CHECK(da_p_r_dim(4, "quantum", &opt, &v) == DA_OK);
  CHECK(v == 91);
  CHECK(da_ideal_dim(3, "classical", &opt, &v) == DA_ERR_ARGUMENT);
}

TEST_CASE("verify reports") {
  da_options opt{11, 0, 2, 0};
  char* s = nullptr;
  int pass = 0;
  CHECK(da_verify(4, "classical", "both", "json", &opt, &s, &pass) == DA_OK);
  CHECK(pass == 1);
  auto j = nlohmann::json::parse(take(s));
  CHECK(j["claims"].is_array());
  CHECK(j["claims"].size() > 0);
  for (const auto& c : j["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c["status"] == "pass");
  }

  CHECK(da_verify(4, "structure", "", "pretty", &opt, &s, &pass) == DA_OK);
  CHECK(pass == 1);
  CHECK(take(s).find("all claims pass") != std::string::npos);

  CHECK(da_verify(4, "classical", "bogus", "json", &opt, &s, &pass) ==
        DA_ERR_ARGUMENT);
  CHECK(da_verify(4, "classical", "both", "yaml", &opt, &s, &pass) ==
        DA_ERR_ARGUMENT);
}

TEST_CASE("identity suite and specialisation check") {
  char* s = nullptr;
  int ok = 0;
  CHECK(da_identities(&s, &ok) == DA_OK);
  CHECK(ok == 1);
  CHECK(take(s).find(": ok") != std::string::npos);

  CHECK(da_specialize_check(3, &s, &ok) == DA_OK);
  CHECK(ok == 1);
  CHECK(take(s).find("all agree") != std::string::npos);
  CHECK(da_specialize_check(9, &s, &ok) == DA_ERR_ARGUMENT);
}

TEST_CASE("word evaluation") {
  char* s = nullptr;
  CHECK(da_eval(2, "g1 g1^-1", "quantum", &s) == DA_OK);
  std::string q = take(s);
  CHECK(q == "1*q^0\t1-1',2-2'\n");  // single basis term: the unit

  CHECK(da_eval(2, "e1 e1", "classical", &s) == DA_OK);
  CHECK(take(s).rfind("3\t", 0) == 0);  // e^2 = 3 e

  CHECK(da_eval(2, "s1 s1", "classical", &s) == DA_OK);
  CHECK(take(s).rfind("1\t", 0) == 0);

  CHECK(da_eval(2, "x1", "quantum", &s) == DA_ERR_ARGUMENT);
  CHECK(da_eval(2, "q7", "classical", &s) == DA_ERR_ARGUMENT);
}

TEST_CASE("byte-identical determinism with a fixed seed") {
  da_options opt{42, 0, 2, 0};
  char *a = nullptr, *b = nullptr;
  CHECK(da_simple_dims(5, "classical", &opt, &a) == DA_OK);
  CHECK(da_simple_dims(5, "classical", &opt, &b) == DA_OK);
  CHECK(take(a) == take(b));

  long u = -1, v = -2;
  CHECK(da_ideal_dim(4, "quantum", &opt, &u) == DA_OK);
  CHECK(da_ideal_dim(4, "quantum", &opt, &v) == DA_OK);
  CHECK(u == v);

  CHECK(da_gram(4, "2,2", "quantum", "tsv", &a) == DA_OK);
  CHECK(da_gram(4, "2,2", "quantum", "tsv", &b) == DA_OK);
  CHECK(take(a) == take(b));
}
