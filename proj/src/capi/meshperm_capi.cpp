#include "meshperm/meshperm.h"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "codes.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "matcher.hpp"
#include "mesh_pattern.hpp"
#include "permutation.hpp"
#include "serialize.hpp"
#include "stats.hpp"
#include "verify.hpp"

struct mp_perm {
  meshperm::Permutation value;
};

struct mp_pattern {
  meshperm::MeshPattern value;
};

struct mp_verify_options {
  meshperm::VerifyOptions options;
  int n_min = -1;
  int n_max = -1;
  bool has_params = false;
  std::vector<int> params;
};

namespace {

thread_local std::string last_error;
thread_local long last_offset = -1;

mp_status fail(mp_status status, std::string message, long offset = -1) {
  last_error = std::move(message);
  last_offset = offset;
  return status;
}

// Runs body() and turns exceptions into status codes.
template <class Body>
mp_status guarded(Body&& body) {
  try {
    last_error.clear();
    last_offset = -1;
    body();
    return MP_OK;
  } catch (const meshperm::ParseError& e) {
    return fail(MP_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const meshperm::UnknownClaim& e) {
    return fail(MP_ERR_UNKNOWN_CLAIM, e.what());
  } catch (const meshperm::DomainError& e) {
    return fail(MP_ERR_DOMAIN, e.what());
  } catch (const meshperm::InvalidInput& e) {
    return fail(MP_ERR_INVALID_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MP_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mp_status null_arg(const char* what) { return fail(MP_ERR_NULL_ARG, std::string("null argument: ") + what); }

void require_format(mp_format format, bool csv_ok) {
  if (format == MP_FORMAT_JSON) return;
  if (format == MP_FORMAT_CSV && csv_ok) return;
  throw meshperm::InvalidInput("unsupported output format");
}

}  // namespace

extern "C" {

const char* mp_version(void) { return "0.1.0"; }

const char* mp_last_error(void) { return last_error.c_str(); }

long mp_last_error_offset(void) { return last_offset; }

void mp_string_free(char* s) { std::free(s); }

mp_status mp_perm_parse(const char* text, mp_perm** out) {
  if (text == nullptr) return null_arg("text");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new mp_perm{meshperm::Permutation::parse(text)}; });
}

mp_status mp_perm_from_values(const int* values, size_t n, mp_perm** out) {
  if (values == nullptr && n > 0) return null_arg("values");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new mp_perm{meshperm::Permutation(std::vector<int>(values, values + n))}; });
}

void mp_perm_free(mp_perm* p) { delete p; }

size_t mp_perm_length(const mp_perm* p) { return p == nullptr ? 0 : static_cast<size_t>(p->value.size()); }

mp_status mp_perm_values(const mp_perm* p, int* out, size_t capacity) {
  if (p == nullptr) return null_arg("perm");
  if (out == nullptr && p->value.size() > 0) return null_arg("out");
  const auto values = p->value.values();
  if (capacity < values.size()) return fail(MP_ERR_INVALID_INPUT, "output buffer too small");
  std::copy(values.begin(), values.end(), out);
  last_error.clear();
  return MP_OK;
}

mp_status mp_perm_format(const mp_perm* p, char** out) {
  if (p == nullptr) return null_arg("perm");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = duplicate(p->value.to_string()); });
}

mp_status mp_perm_involution(const mp_perm* p, const char* which, mp_perm** out) {
  if (p == nullptr) return null_arg("perm");
  if (which == nullptr) return null_arg("which");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = new mp_perm{meshperm::apply(meshperm::parse_involution(which), p->value)};
  });
}

mp_status mp_perm_lehmer(const mp_perm* p, char** out) {
  if (p == nullptr) return null_arg("perm");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = duplicate(meshperm::lehmer(p->value).to_string()); });
}

mp_status mp_perm_active_zone(const mp_perm* p, int* a, int* b) {
  if (p == nullptr) return null_arg("perm");
  if (a == nullptr || b == nullptr) return null_arg("a/b");
  return guarded([&] {
    const meshperm::ActiveZone zone = meshperm::active_zone(p->value);
    *a = zone.empty() ? 0 : zone.interval->first;
    *b = zone.empty() ? 0 : zone.interval->second;
  });
}

mp_status mp_perm_stats_json(const mp_perm* p, const char* names, int fast, char** out) {
  if (p == nullptr) return null_arg("perm");
  if (names == nullptr) return null_arg("names");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    std::vector<std::string> list;
    std::string current;
    for (const char* c = names;; ++c) {
      if (*c == ',' || *c == '\0') {
        if (!current.empty()) list.push_back(current);
        current.clear();
        if (*c == '\0') break;
      } else if (*c != ' ') {
        current.push_back(*c);
      }
    }
    const auto engine = fast ? meshperm::StatEngine::Fast : meshperm::StatEngine::Mesh;
    *out = duplicate(meshperm::stat_tuple_json(p->value, meshperm::stat_tuple(p->value, list, engine)));
  });
}

mp_status mp_pattern_parse(const char* spec, mp_pattern** out) {
  if (spec == nullptr) return null_arg("spec");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new mp_pattern{meshperm::parse_pattern(spec)}; });
}

mp_status mp_pattern_catalog(const char* name, int k, mp_pattern** out) {
  if (name == nullptr) return null_arg("name");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    *out = new mp_pattern{k == 0 ? meshperm::catalog(name) : meshperm::catalog(name, k)};
  });
}

void mp_pattern_free(mp_pattern* p) { delete p; }

mp_status mp_pattern_render(const mp_pattern* p, char** out) {
  if (p == nullptr) return null_arg("pattern");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = duplicate(meshperm::render_pattern(p->value)); });
}

mp_status mp_pattern_flip(const mp_pattern* p, mp_pattern** out) {
  if (p == nullptr) return null_arg("pattern");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = new mp_pattern{meshperm::flip_diagonal(p->value)}; });
}

mp_status mp_count(const mp_pattern* pattern, const mp_perm* host, uint64_t* out) {
  if (pattern == nullptr) return null_arg("pattern");
  if (host == nullptr) return null_arg("host");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = meshperm::count(host->value, pattern->value); });
}

mp_status mp_contains(const mp_pattern* pattern, const mp_perm* host, int* out) {
  if (pattern == nullptr) return null_arg("pattern");
  if (host == nullptr) return null_arg("host");
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = meshperm::Matcher(pattern->value).contains(host->value) ? 1 : 0; });
}

mp_status mp_occurrences_json(const mp_pattern* pattern, const mp_perm* host, char** out) {
  if (pattern == nullptr) return null_arg("pattern");
  if (host == nullptr) return null_arg("host");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    const auto found = meshperm::occurrences(host->value, pattern->value);
    *out = duplicate(meshperm::occurrences_json(pattern->value, host->value, found));
  });
}

mp_status mp_catalog_json(char** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = duplicate(meshperm::catalog_json()); });
}

mp_status mp_distribution(const char* patterns, int n, int jobs, mp_format format, char** out) {
  if (patterns == nullptr) return null_arg("patterns");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    require_format(format, true);
    if (n < 0) throw meshperm::DomainError("n must be nonnegative");
    const auto list = meshperm::parse_pattern_list(patterns);
    const auto names = meshperm::split_pattern_list(patterns);
    const auto dist = meshperm::joint_distribution(list, n, jobs);
    *out = duplicate(format == MP_FORMAT_CSV ? meshperm::distribution_csv(dist, list.size())
                                             : meshperm::distribution_json(dist, names, n));
  });
}

mp_status mp_enumerate(const char* patterns, int n, int list, int jobs, mp_format format, char** out) {
  if (patterns == nullptr) return null_arg("patterns");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    require_format(format, true);
    const auto found =
        meshperm::enumerate_class({meshperm::parse_pattern_list(patterns), n, list != 0}, jobs);
    const auto names = meshperm::split_pattern_list(patterns);
    *out = duplicate(format == MP_FORMAT_CSV ? meshperm::class_result_csv(found)
                                             : meshperm::class_result_json(found, names));
  });
}

mp_status mp_genfun(const char* which, int n, int recurrence, int jobs, mp_format format, char** out) {
  if (which == nullptr) return null_arg("which");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    require_format(format, true);
    const std::string tag(which);
    if (tag == "F" || tag == "f") {
      const auto poly = recurrence ? meshperm::f_poly_recurrence(n) : meshperm::f_poly_bruteforce(n, jobs);
      *out = duplicate(format == MP_FORMAT_CSV ? meshperm::bivariate_csv(poly) : meshperm::bivariate_json(poly, n));
    } else if (tag == "S" || tag == "s") {
      const auto poly = recurrence ? meshperm::s_poly_recurrence(n) : meshperm::s_poly_bruteforce(n);
      *out = duplicate(format == MP_FORMAT_CSV ? meshperm::univariate_csv(poly)
                                               : meshperm::univariate_json(poly, n));
    } else {
      throw meshperm::DomainError("generating function must be F or S");
    }
  });
}

mp_verify_options* mp_verify_options_new(void) { return new (std::nothrow) mp_verify_options(); }

void mp_verify_options_free(mp_verify_options* o) { delete o; }

mp_status mp_verify_options_set_max_n(mp_verify_options* o, int max_n) {
  if (o == nullptr) return null_arg("options");
  if (max_n < 0) return fail(MP_ERR_INVALID_INPUT, "max_n must be nonnegative");
  o->options.max_n = max_n;
  return MP_OK;
}

mp_status mp_verify_options_set_jobs(mp_verify_options* o, int jobs) {
  if (o == nullptr) return null_arg("options");
  if (jobs < 1) return fail(MP_ERR_INVALID_INPUT, "jobs must be at least 1");
  o->options.jobs = jobs;
  return MP_OK;
}

mp_status mp_verify_options_set_range(mp_verify_options* o, int n_min, int n_max) {
  if (o == nullptr) return null_arg("options");
  if (n_min < 0 || n_max < n_min) return fail(MP_ERR_INVALID_INPUT, "range must satisfy 0 <= n_min <= n_max");
  o->n_min = n_min;
  o->n_max = n_max;
  return MP_OK;
}

mp_status mp_verify_options_set_params(mp_verify_options* o, const int* ks, size_t count) {
  if (o == nullptr) return null_arg("options");
  if (ks == nullptr && count > 0) return null_arg("ks");
  o->has_params = true;
  o->params.assign(ks, ks + count);
  return MP_OK;
}

mp_status mp_verify_options_set_fault(mp_verify_options* o, int pattern_index) {
  if (o == nullptr) return null_arg("options");
  if (pattern_index < 0 || pattern_index > 14) return fail(MP_ERR_INVALID_INPUT, "fault index must be in 0..14");
  o->options.fault.pattern_index = pattern_index;
  return MP_OK;
}

mp_status mp_verify(const char* claim, const mp_verify_options* options, mp_format format, char** out,
                    int* passed) {
  if (claim == nullptr) return null_arg("claim");
  if (out == nullptr) return null_arg("out");
  return guarded([&] {
    if (format != MP_FORMAT_JSON && format != MP_FORMAT_TEXT) throw meshperm::InvalidInput("unsupported output format");
    const mp_verify_options defaults;
    const mp_verify_options& o = options ? *options : defaults;
    std::vector<meshperm::VerificationReport> reports;
    if (std::string(claim) == "all") {
      meshperm::VerifyOptions run = o.options;
      if (run.max_n == 0) run.max_n = INT_MAX;
      reports = meshperm::run_all(run);
    } else {
      meshperm::ClaimSpec spec = meshperm::default_spec(claim);
      if (o.n_min >= 0) {
        spec.n_min = o.n_min;
        spec.n_max = o.n_max;
      }
      if (o.has_params) spec.params = o.params;
      reports.push_back(meshperm::run_claim(spec, o.options));
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed;
    if (passed != nullptr) *passed = ok ? 1 : 0;
    if (format == MP_FORMAT_TEXT) {
      *out = duplicate(meshperm::reports_text(reports));
    } else if (reports.size() == 1 && std::string(claim) != "all") {
      *out = duplicate(meshperm::report_json(reports.front()));
    } else {
      *out = duplicate(meshperm::reports_json(reports));
    }
  });
}

mp_status mp_claims_json(char** out) {
  if (out == nullptr) return null_arg("out");
  return guarded([&] { *out = duplicate(meshperm::claims_json()); });
}

}  // extern "C"
