#include <doctest.h>

#include <cstdlib>
#include <set>

#include "errors.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace meshperm;

namespace {

// Report JSON without the "run" block (timing, worker count).
std::string stable_json(VerificationReport r) {
  r.wall_time_ms = 0;
  r.workers = 0;
  return report_json(r);
}

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> ids;
  for (const ClaimInfo& c : claim_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK(c.n_min <= c.n_max);
  }
  for (int i = 1; i <= 7; ++i) CHECK(ids.count("conj" + std::to_string(i)) == 1);
  for (const char* id : {"thm-quintuple", "thm-quadruple", "remark-p9p12-equidistribution", "lemma-active-pairs",
                         "lemma-lehmer-p13p14", "thm-F-recurrence", "F-symmetry", "F-zero-locus",
                         "thm-S-functional", "thm-AD3", "prop-corners", "auxiliary-132-321"}) {
    CHECK(ids.count(id) == 1);
  }
  for (int row = 1; row <= 8; ++row) CHECK(ids.count("table1-row" + std::to_string(row)) == 1);
  CHECK(resolve_claim_id("prop-AD-empty") == "table1-row1");
  CHECK(resolve_claim_id("thm-A3D3") == "table1-row3");
  CHECK(resolve_claim_id("genfun-F") == "thm-F-recurrence");
  CHECK(default_spec("prop-corners").params == std::vector<int>{2, 3, 4});
  CHECK_THROWS_AS(default_spec("conj8"), UnknownClaim);
  CHECK_THROWS_AS(run_claim({"nope", 1, 2, {}}), DomainError);
}

TEST_CASE("P13,P14 joint symmetry through n = 7") {
  const VerificationReport r = run_claim({"conj7", 1, 7, {}});
  CHECK(r.passed);
  CHECK(r.claim == "conj7");
  CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("quintuple identity through n = 7") { CHECK(run_claim({"thm-quintuple", 1, 7, {}}).passed); }

TEST_CASE("A3,D3 counts are powers of two") {
  const VerificationReport r = run_claim({"table1-row3", 1, 9, {}});
  CHECK(r.passed);
  REQUIRE(r.observed.size() == 9);
  for (int i = 0; i < 9; ++i) {
    CHECK(r.observed[i].first == i + 1);
    CHECK(r.observed[i].second == std::to_string(1 << i));
  }
}

TEST_CASE("corrupted statistic is caught") {
  for (int i = 1; i <= 14; ++i) {
    VerifyOptions options;
    options.fault.pattern_index = i;
    const std::string claim = i <= 8 ? "lemma-active-pairs" : i <= 12 ? "lemma-middle-entries" : "lemma-lehmer-p13p14";
    const VerificationReport r = run_claim(default_spec(claim), options);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample.has_value());
    CHECK(r.counterexample->n >= 2);
    CHECK(r.counterexample->permutation.has_value());
  }
  VerifyOptions options;
  options.fault.pattern_index = 3;
  const VerificationReport conj = run_claim({"conj2", 1, 6, {}}, options);
  CHECK_FALSE(conj.passed);
  CHECK(conj.counterexample->n == 2);
  CHECK(*conj.counterexample->permutation == "12");
  options.fault.pattern_index = 15;
  CHECK_THROWS_AS(run_claim({"conj2", 1, 6, {}}, options), InvalidInput);
}

TEST_CASE("first counterexample does not depend on the worker count") {
  VerifyOptions one;
  one.fault.pattern_index = 8;
  VerifyOptions many = one;
  many.jobs = 4;
  for (const char* id : {"conj4", "thm-quintuple", "lemma-active-pairs"}) {
    const ClaimSpec spec{id, 1, 7, {}};
    const auto a = run_claim(spec, one);
    const auto b = run_claim(spec, many);
    CHECK_FALSE(a.passed);
    CHECK(stable_json(a) == stable_json(b));
  }
  CHECK(stable_json(run_claim({"table1-row2", 2, 8, {}}, one)) == stable_json(run_claim({"table1-row2", 2, 8, {}}, many)));
}

TEST_CASE("run_all clipping") {
  VerifyOptions options;
  options.max_n = 1;
  const auto reports = run_all(options);
  CHECK(reports.size() == claim_registry().size());
  for (const auto& r : reports) {
    CHECK(r.passed);
    CHECK(r.n_max <= 1);
  }
  options.max_n = 0;
  CHECK_THROWS_AS(run_all(options), DomainError);
}

TEST_CASE("environment cap") {
  ::setenv("MESHPERM_MAX_N", "3", 1);
  const VerificationReport r = run_claim(default_spec("conj1"));
  CHECK(r.n_max == 3);
  ::setenv("MESHPERM_MAX_N", "x", 1);
  CHECK_THROWS_AS(run_claim(default_spec("conj1")), InvalidInput);
  ::unsetenv("MESHPERM_MAX_N");
  CHECK(clipped_max_n(9, {}) == 9);
}

TEST_CASE("parametric and empty ranges") {
  CHECK(run_claim({"table1-row5", 1, 8, {3, 6}}).passed);
  CHECK(run_claim({"prop-corners", 2, 6, {5}}).passed);
  CHECK_THROWS_AS(run_claim({"conj1", 5, 4, {}}), InvalidInput);
}
