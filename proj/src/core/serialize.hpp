#pragma once

#include <span>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "matcher.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "stats.hpp"

namespace meshperm {

// JSON texts are pretty-printed with two-space indentation and keys in a
// fixed order. Big integers are emitted as decimal strings.

// Timing and worker count sit under "run" so that the rest of the object
// can be compared across runs.
std::string report_json(const VerificationReport& report);
std::string reports_json(std::span<const VerificationReport> reports);

// One line per report: "PASS conj1 n=1..9 (12 ms)".
std::string reports_text(std::span<const VerificationReport> reports);

// Header "k,count", "k,l,count", or "v1,...,vm,count" for m > 2.
std::string distribution_csv(const Distribution& dist, std::size_t arity);
std::string distribution_json(const Distribution& dist, std::span<const std::string> pattern_names, int n);

std::string class_result_json(const ClassResult& result, std::span<const std::string> pattern_names);
// "n,count" and a row, or one "permutation" column when members are listed.
std::string class_result_csv(const ClassResult& result);

std::string bivariate_json(const BivariatePolynomial& poly, int n);
std::string bivariate_csv(const BivariatePolynomial& poly);
std::string univariate_json(const UnivariatePolynomial& poly, int n);
std::string univariate_csv(const UnivariatePolynomial& poly);

std::string occurrences_json(const MeshPattern& pattern, const Permutation& host,
                             std::span<const Occurrence> found);

// The fourteen P_i plus the A/D families at k = 2, with rendered shadings.
std::string catalog_json();

std::string claims_json();

std::string stat_tuple_json(const Permutation& p, const StatTuple& stats);

}  // namespace meshperm
