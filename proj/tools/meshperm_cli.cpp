// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meshperm/meshperm.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
  mp_status status;
};

void check(mp_status status) {
  if (status != MP_OK) throw Failure{status};
}

// Owning wrappers for the C handles.
struct PermDeleter {
  void operator()(mp_perm* p) const { mp_perm_free(p); }
};
struct PatternDeleter {
  void operator()(mp_pattern* p) const { mp_pattern_free(p); }
};
struct OptionsDeleter {
  void operator()(mp_verify_options* o) const { mp_verify_options_free(o); }
};
using PermPtr = std::unique_ptr<mp_perm, PermDeleter>;
using PatternPtr = std::unique_ptr<mp_pattern, PatternDeleter>;
using OptionsPtr = std::unique_ptr<mp_verify_options, OptionsDeleter>;

PermPtr parse_perm(const std::string& text) {
  mp_perm* p = nullptr;
  check(mp_perm_parse(text.c_str(), &p));
  return PermPtr(p);
}

PatternPtr parse_pattern(const std::string& text) {
  mp_pattern* p = nullptr;
  check(mp_pattern_parse(text.c_str(), &p));
  return PatternPtr(p);
}

// Prints and frees a string returned by the library.
void emit(char* text) {
  std::fputs(text, stdout);
  const std::size_t len = std::char_traits<char>::length(text);
  if (len == 0 || text[len - 1] != '\n') std::fputc('\n', stdout);
  mp_string_free(text);
}

mp_format format_from(const std::string& name) {
  if (name == "csv") return MP_FORMAT_CSV;
  if (name == "text") return MP_FORMAT_TEXT;
  return MP_FORMAT_JSON;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mesh-pattern statistics, involutions and claim verification on permutations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mp_version()));

  auto* catalog = app.add_subcommand("catalog", "List the named mesh patterns and families");
  auto* claims = app.add_subcommand("claims", "List the registered verification claims");

  std::string pattern_spec, perm_text;
  bool want_occurrences = false;
  auto* count = app.add_subcommand("count", "Count occurrences of a pattern in a permutation");
  count->add_option("--pattern", pattern_spec, "P1..P14, A<k>, D<k>, At<k>, Dt<k>, a word, or mesh(...)")->required();
  count->add_option("--perm", perm_text, "Permutation, e.g. 461928753 or 10,1,2,...")->required();
  count->add_flag("--occurrences", want_occurrences, "Print every occurrence as JSON");

  std::string map_name;
  auto* involution = app.add_subcommand("involution", "Apply phi, psi or theta to a permutation");
  involution->add_option("--map", map_name, "phi | psi | theta")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "theta"}));
  involution->add_option("--perm", perm_text)->required();

  std::string stat_names = "lrmin,P1,P2,P3,P4,P5,P6,P7,P8,P9,P10,P11,P12,P13,P14";
  std::string engine = "fast";
  auto* stats = app.add_subcommand("stats", "Statistics of one permutation");
  stats->add_option("--perm", perm_text)->required();
  stats->add_option("--names", stat_names, "Comma-separated: lrmin, P1..P14, vecP3, vecP4, vecP7, vecP8")->capture_default_str();
  stats->add_option("--engine", engine, "fast | mesh")->capture_default_str()->check(CLI::IsMember({"fast", "mesh"}));

  auto* lehmer = app.add_subcommand("lehmer", "Lehmer code and active zone of a permutation");
  lehmer->add_option("--perm", perm_text)->required();

  std::string patterns;
  int n = 0;
  int jobs = 1;
  std::string format = "json";
  auto* distribution = app.add_subcommand("distribution", "Joint distribution of pattern counts over S_n");
  distribution->add_option("--patterns", patterns, "Comma-separated pattern list, e.g. P13,P14")->required();
  distribution->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  distribution->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  distribution->add_option("--format", format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));

  bool list = false;
  auto* enumerate = app.add_subcommand("enumerate", "Permutations of length n avoiding every listed pattern");
  enumerate->add_option("--avoid", patterns, "Comma-separated pattern list, e.g. A3,D3")->required();
  enumerate->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--list", list, "Include the members");
  enumerate->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));

  std::string which;
  bool recurrence = false;
  auto* genfun = app.add_subcommand("genfun", "F_n(s,t) over S_n or S_n(t) over S_n(132)");
  genfun->add_option("--which", which, "F | S")->required()->check(CLI::IsMember({"F", "S"}));
  genfun->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  genfun->add_flag("--recurrence", recurrence, "Use the recurrence instead of brute force");
  genfun->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  genfun->add_option("--format", format, "json | csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));

  std::string claim;
  int max_n = 0;
  std::vector<int> n_range;
  std::vector<int> params;
  int fault = 0;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "Check a registered claim, or all of them");
  verify->add_option("--claim", claim, "Claim id or 'all'")->required();
  verify->add_option("--max-n", max_n, "Upper bound on n for every claim")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_format, "text | json")->capture_default_str()->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--range", n_range, "Explicit n range for one claim: N_MIN N_MAX")->expected(2);
  verify->add_option("--params", params, "Family sizes k for parametric claims")->delimiter(',');
  verify->add_option("--inject-fault", fault, "Test hook: corrupt the count of P_i (1..14)")
      ->check(CLI::Range(0, 14))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    char* out = nullptr;
    if (*catalog) {
      check(mp_catalog_json(&out));
      emit(out);
    } else if (*claims) {
      check(mp_claims_json(&out));
      emit(out);
    } else if (*count) {
      const PatternPtr pattern = parse_pattern(pattern_spec);
      const PermPtr perm = parse_perm(perm_text);
      if (want_occurrences) {
        check(mp_occurrences_json(pattern.get(), perm.get(), &out));
        emit(out);
      } else {
        std::uint64_t c = 0;
        check(mp_count(pattern.get(), perm.get(), &c));
        std::printf("%llu\n", static_cast<unsigned long long>(c));
      }
    } else if (*involution) {
      const PermPtr perm = parse_perm(perm_text);
      mp_perm* image = nullptr;
      check(mp_perm_involution(perm.get(), map_name.c_str(), &image));
      const PermPtr owned(image);
      check(mp_perm_format(owned.get(), &out));
      emit(out);
    } else if (*stats) {
      const PermPtr perm = parse_perm(perm_text);
      check(mp_perm_stats_json(perm.get(), stat_names.c_str(), engine == "fast" ? 1 : 0, &out));
      emit(out);
    } else if (*lehmer) {
      const PermPtr perm = parse_perm(perm_text);
      check(mp_perm_lehmer(perm.get(), &out));
      int a = 0, b = 0;
      check(mp_perm_active_zone(perm.get(), &a, &b));
      std::printf("lehmer %s\n", out);
      mp_string_free(out);
      if (a == 0) {
        std::printf("active-zone empty\n");
      } else {
        std::printf("active-zone [%d,%d]\n", a, b);
      }
    } else if (*distribution) {
      check(mp_distribution(patterns.c_str(), n, jobs, format_from(format), &out));
      emit(out);
    } else if (*enumerate) {
      check(mp_enumerate(patterns.c_str(), n, list ? 1 : 0, jobs, format_from(format), &out));
      emit(out);
    } else if (*genfun) {
      check(mp_genfun(which.c_str(), n, recurrence ? 1 : 0, jobs, format_from(format), &out));
      emit(out);
    } else if (*verify) {
      const OptionsPtr options(mp_verify_options_new());
      if (!options) throw Failure{MP_ERR_INTERNAL};
      check(mp_verify_options_set_max_n(options.get(), max_n));
      check(mp_verify_options_set_jobs(options.get(), jobs));
      check(mp_verify_options_set_fault(options.get(), fault));
      if (!n_range.empty()) check(mp_verify_options_set_range(options.get(), n_range[0], n_range[1]));
      if (!params.empty()) check(mp_verify_options_set_params(options.get(), params.data(), params.size()));
      int passed = 0;
      check(mp_verify(claim.c_str(), options.get(), format_from(verify_format), &out, &passed));
      emit(out);
      return passed ? kExitPass : kExitClaimFailed;
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", mp_last_error());
    return kExitUsage;
  }
  return kExitPass;
}
