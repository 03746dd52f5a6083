#include <doctest.h>

#include "avoid321/errors.hpp"
#include "avoid321/report.hpp"
#include "avoid321/verify.hpp"

using namespace avoid321;

TEST_CASE("registry") {
  const auto& labels = identity_labels();
  for (const char* required : {"thm1.1", "prop2.1", "lemma2.2", "prop3.1", "phi-involution", "eo-identities",
                               "thm4.1", "lemma4.2-parity", "prop4.3", "cor4.4", "thm5.1",
                               "srs-matching-consistency"}) {
    CHECK(std::find(labels.begin(), labels.end(), required) != labels.end());
  }
  CHECK_THROWS_AS(verify("no-such-identity", 3), UnknownIdentity);
  CHECK_THROWS_AS(verify("thm1.1", 15), LimitExceeded);
}

TEST_CASE("every identity holds at small sizes") {
  for (const auto& label : identity_labels()) {
    if (label == "lind-sign-balance") continue;
    CAPTURE(label);
    const auto report = verify(label, 8);
    CHECK(report.pass());
    CHECK_FALSE(report.cases.empty());
  }
}

TEST_CASE("the signed lind distribution is flipped for even n") {
  const auto report = verify("lind-sign-balance", 6);
  CHECK_FALSE(report.pass());
  for (const auto& c : report.cases) CHECK(c.pass == (c.n % 2 == 1));
}

TEST_CASE("reports are independent of the worker count") {
  for (const char* label : {"thm1.1", "thm4.1", "cor4.4", "lis-distribution"}) {
    const auto one = verify(label, 10, {1, false});
    const auto many = verify(label, 10, {4, false});
    CHECK(to_json(one).dump() == to_json(many).dump());
  }
}

TEST_CASE("JSON report shape") {
  const auto json = to_json(verify("thm1.1", 4));
  REQUIRE(json.is_array());
  REQUIRE(json.size() == 2);
  const auto& first = json[0];
  std::vector<std::string> keys;
  for (const auto& item : first.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"identity", "n", "pass", "lhs", "rhs", "counterexample"});
  CHECK(first["identity"] == "thm1.1");
  CHECK(first["n"] == 3);
  CHECK(first["pass"] == true);
  CHECK(first["lhs"]["3"] == 1);
  CHECK(first["rhs"]["3"] == 1);
  CHECK(first["counterexample"].is_null());
  CHECK(json[1]["n"] == 4);
  CHECK(json[1]["lhs"]["4"] == 1);
  CHECK(json[1]["lhs"]["3"] == -1);
}

TEST_CASE("counterexamples are reported") {
  const auto report = verify("lind-sign-balance", 2);
  const auto json = to_json(report);
  CHECK(json[1]["n"] == 2);
  CHECK(json[1]["pass"] == false);
  CHECK(json[1]["lhs"] != json[1]["rhs"]);
}

TEST_CASE("CSV and text reports") {
  const auto report = verify("thm4.1", 3);
  const auto csv = to_csv(report);
  CHECK(csv.rfind("identity,n,key,lhs,rhs,pass\n", 0) == 0);
  CHECK(csv.find("thm4.1,2,\"0\",1,1,true") != std::string::npos);
  CHECK(csv.find("thm4.1,2,\"1\",-1,-1,true") != std::string::npos);
  CHECK(to_text(report).find("thm4.1: all cases pass") != std::string::npos);
}

TEST_CASE("distribution reports") {
  const auto dist = signed_distribution(3, Statistic::lis);
  const auto json = to_json(dist, 3, Statistic::lis);
  CHECK(json["n"] == 3);
  CHECK(to_csv(dist, 3, Statistic::lis) ==
        "n,statistic,value,even,odd,difference\n3,lis,2,2,2,0\n3,lis,3,1,0,1\n");
}
