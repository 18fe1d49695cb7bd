#include "serialize.hpp"

#include <cstdio>

#include "json.hpp"

#include "mesh_pattern.hpp"
#include "verify.hpp"

namespace meshperm {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json report_object(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim;
  j["statement"] = r.statement;
  j["n_range"] = {r.n_min, r.n_max};
  j["params"] = r.params;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    Json cj;
    cj["n"] = c.n;
    cj["permutation"] = c.permutation ? Json(*c.permutation) : Json(nullptr);
    cj["expected"] = c.expected;
    cj["actual"] = c.actual;
    j["counterexample"] = cj;
  } else {
    j["counterexample"] = nullptr;
  }
  Json observed = Json::array();
  for (const auto& [n, value] : r.observed) observed.push_back(Json{{"n", n}, {"value", value}});
  j["observed"] = observed;
  j["notes"] = r.notes;
  j["run"] = Json{{"wall_time_ms", r.wall_time_ms}, {"workers", r.workers}};
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& report) { return dump(report_object(report)); }

std::string reports_json(std::span<const VerificationReport> reports) {
  Json j;
  bool passed = true;
  Json failed = Json::array();
  Json items = Json::array();
  for (const VerificationReport& r : reports) {
    passed = passed && r.passed;
    if (!r.passed) failed.push_back(r.claim);
    items.push_back(report_object(r));
  }
  j["passed"] = passed;
  j["claims"] = reports.size();
  j["failed"] = failed;
  j["reports"] = items;
  return dump(j);
}

std::string reports_text(std::span<const VerificationReport> reports) {
  std::string out;
  for (const VerificationReport& r : reports) {
    char timing[64];
    std::snprintf(timing, sizeof timing, " (%.0f ms)", r.wall_time_ms);
    out += (r.passed ? "PASS " : "FAIL ") + r.claim + " n=" + std::to_string(r.n_min) + ".." +
           std::to_string(r.n_max) + timing + "\n";
    if (r.counterexample) {
      const Counterexample& c = *r.counterexample;
      out += "  counterexample n=" + std::to_string(c.n);
      if (c.permutation) out += " sigma=" + *c.permutation;
      out += "\n  expected: " + c.expected + "\n  actual:   " + c.actual + "\n";
    }
  }
  return out;
}

std::string distribution_csv(const Distribution& dist, std::size_t arity) {
  std::string out;
  if (arity == 1) {
    out = "k,count\n";
  } else if (arity == 2) {
    out = "k,l,count\n";
  } else {
    for (std::size_t i = 1; i <= arity; ++i) out += "v" + std::to_string(i) + ",";
    out += "count\n";
  }
  for (const auto& [values, c] : dist) {
    for (std::uint64_t v : values) out += std::to_string(v) + ",";
    out += std::to_string(c) + "\n";
  }
  return out;
}

std::string distribution_json(const Distribution& dist, std::span<const std::string> pattern_names, int n) {
  Json j;
  j["patterns"] = std::vector<std::string>(pattern_names.begin(), pattern_names.end());
  j["n"] = n;
  Json cells = Json::array();
  for (const auto& [values, c] : dist) cells.push_back(Json{{"values", values}, {"count", c}});
  j["cells"] = cells;
  return dump(j);
}

std::string class_result_json(const ClassResult& result, std::span<const std::string> pattern_names) {
  Json j;
  j["patterns"] = std::vector<std::string>(pattern_names.begin(), pattern_names.end());
  j["n"] = result.n;
  j["count"] = result.count.str();
  if (result.members) {
    Json members = Json::array();
    for (const Permutation& p : *result.members) members.push_back(p.to_string());
    j["members"] = members;
  }
  return dump(j);
}

std::string class_result_csv(const ClassResult& result) {
  if (!result.members) return "n,count\n" + std::to_string(result.n) + "," + result.count.str() + "\n";
  std::string out = "permutation\n";
  for (const Permutation& p : *result.members) out += p.to_string() + "\n";
  return out;
}

std::string bivariate_json(const BivariatePolynomial& poly, int n) {
  Json j;
  j["n"] = n;
  j["polynomial"] = poly.to_string();
  Json terms = Json::array();
  for (const auto& [exp, c] : poly.terms()) terms.push_back(Json{{"s", exp.first}, {"t", exp.second}, {"coeff", c.str()}});
  j["terms"] = terms;
  return dump(j);
}

std::string bivariate_csv(const BivariatePolynomial& poly) {
  std::string out = "s,t,coeff\n";
  for (const auto& [exp, c] : poly.terms()) {
    out += std::to_string(exp.first) + "," + std::to_string(exp.second) + "," + c.str() + "\n";
  }
  return out;
}

std::string univariate_json(const UnivariatePolynomial& poly, int n) {
  Json j;
  j["n"] = n;
  j["polynomial"] = poly.to_string();
  Json terms = Json::array();
  for (int d = 0; d <= poly.degree(); ++d) {
    if (poly.coefficient(d) != 0) terms.push_back(Json{{"t", d}, {"coeff", poly.coefficient(d).str()}});
  }
  j["terms"] = terms;
  return dump(j);
}

std::string univariate_csv(const UnivariatePolynomial& poly) {
  std::string out = "t,coeff\n";
  for (int d = 0; d <= poly.degree(); ++d) {
    if (poly.coefficient(d) != 0) out += std::to_string(d) + "," + poly.coefficient(d).str() + "\n";
  }
  return out;
}

std::string occurrences_json(const MeshPattern& pattern, const Permutation& host,
                             std::span<const Occurrence> found) {
  Json j;
  j["pattern"] = render_pattern(pattern);
  j["perm"] = host.to_string();
  j["count"] = found.size();
  Json list = Json::array();
  for (const Occurrence& o : found) list.push_back(Json{{"positions", o.positions}, {"values", o.values}});
  j["occurrences"] = list;
  return dump(j);
}

std::string catalog_json() {
  Json list = Json::array();
  for (const std::string& name : catalog_names()) {
    list.push_back(Json{{"name", name}, {"pattern", render_pattern(catalog(name))}});
  }
  for (const char* name : {"At", "Dt"}) {
    list.push_back(Json{{"name", name}, {"pattern", render_pattern(catalog(name))}});
  }
  Json j;
  j["patterns"] = list;
  j["families"] = Json{{"A<k>", "12...k with cells (0,k),(k,0)"},
                       {"D<k>", "k...1 with cells (0,0),(k,k)"},
                       {"At<k>", "12...k with all four corner cells"},
                       {"Dt<k>", "k...1 with all four corner cells"}};
  return dump(j);
}

std::string claims_json() {
  Json list = Json::array();
  for (const ClaimInfo& c : claim_registry()) {
    list.push_back(Json{{"id", c.id}, {"statement", c.statement}, {"n_range", {c.n_min, c.n_max}}, {"params", c.params}});
  }
  return dump(Json{{"claims", list}});
}

std::string stat_tuple_json(const Permutation& p, const StatTuple& stats) {
  Json values;
  for (const auto& [name, value] : stats.entries) {
    if (const auto* scalar = std::get_if<std::uint64_t>(&value)) {
      values[name] = *scalar;
    } else {
      values[name] = std::get<PatternVector>(value);
    }
  }
  return dump(Json{{"perm", p.to_string()}, {"stats", values}});
}

}  // namespace meshperm
