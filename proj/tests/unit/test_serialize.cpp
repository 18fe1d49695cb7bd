#include <doctest.h>

#include <json.hpp>

#include "serialize.hpp"
#include "verify.hpp"

using namespace meshperm;
using nlohmann::json;

TEST_CASE("report JSON") {
  VerifyOptions options;
  options.fault.pattern_index = 13;
  const VerificationReport r = run_claim({"conj7", 1, 4, {}}, options);
  const json j = json::parse(report_json(r));
  CHECK(j["claim"] == "conj7");
  CHECK(j["status"] == "fail");
  CHECK(j["n_range"] == json::array({1, 4}));
  CHECK(j["counterexample"]["n"] == 2);
  CHECK(j["counterexample"]["permutation"] == "12");
  CHECK(j["run"]["workers"] == 1);

  const std::vector<VerificationReport> both{run_claim({"conj1", 1, 3, {}}), r};
  const json all = json::parse(reports_json(both));
  CHECK(all["passed"] == false);
  CHECK(all["failed"] == json::array({"conj7"}));
  CHECK(all["reports"].size() == 2);
  const std::string text = reports_text(both);
  CHECK(text.find("PASS conj1 n=1..3") != std::string::npos);
  CHECK(text.find("FAIL conj7") != std::string::npos);
}

TEST_CASE("distribution output") {
  const std::vector<MeshPattern> pair{catalog("P13"), catalog("P14")};
  const Distribution d = joint_distribution(pair, 3);
  CHECK(distribution_csv(d, 2) == "k,l,count\n0,0,4\n0,1,1\n1,0,1\n");
  const std::vector<std::string> names{"P13", "P14"};
  const json j = json::parse(distribution_json(d, names, 3));
  CHECK(j["cells"].size() == 3);
  CHECK(j["patterns"][1] == "P14");
  const std::vector<MeshPattern> one{catalog("A")};
  CHECK(distribution_csv(joint_distribution(one, 2), 1) == "k,count\n0,1\n1,1\n");
}

TEST_CASE("class and polynomial output") {
  const ClassResult r = enumerate_class({{catalog("A3"), catalog("D3")}, 3, true});
  const std::vector<std::string> names{"A3", "D3"};
  const json j = json::parse(class_result_json(r, names));
  CHECK(j["count"] == "4");
  CHECK(j["members"].size() == 4);
  CHECK(class_result_csv(enumerate_class({{catalog("A3")}, 3, false})) == "n,count\n3,5\n");

  const auto f = BivariatePolynomial(4) + BivariatePolynomial::s() + BivariatePolynomial::t();
  const json fj = json::parse(bivariate_json(f, 3));
  CHECK(fj["polynomial"] == "4 + s + t");
  CHECK(fj["terms"].size() == 3);
  CHECK(bivariate_csv(f) == "s,t,coeff\n0,0,4\n0,1,1\n1,0,1\n");
  CHECK(univariate_csv(UnivariatePolynomial(std::vector<BigInt>{2, 0, 3})) == "t,coeff\n0,2\n2,3\n");
}

TEST_CASE("catalog and claims listings") {
  const json c = json::parse(catalog_json());
  CHECK(c["patterns"].size() == 18);
  CHECK(c["patterns"][0]["name"] == "P1");
  const json claims = json::parse(claims_json());
  CHECK(claims["claims"].size() == claim_registry().size());
}
