#include "verify.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "codes.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "genfun.hpp"
#include "matcher.hpp"
#include "mesh_pattern.hpp"
#include "parallel.hpp"
#include "permutation.hpp"
#include "stats.hpp"

namespace meshperm {
namespace {

struct Context {
  int n;
  const ClaimSpec& spec;
  const VerifyOptions& options;
  VerificationReport& report;
};

using Failure = std::optional<Counterexample>;
using Checker = std::function<Failure(Context&)>;
// (expected, actual) for a permutation that breaks the claim.
using Mismatch = std::optional<std::pair<std::string, std::string>>;

struct Entry {
  ClaimInfo info;
  Checker check;
  std::vector<std::string> notes;
};

std::string vector_string(const PatternVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string tuple_string(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  return out + ")";
}

// Matcher-route statistics with the optional fault applied.
class ClaimStats {
 public:
  explicit ClaimStats(FaultInjection fault) : fault_(fault) {}

  std::uint64_t count(const Permutation& p, int i) {
    std::uint64_t c = mesh_.count(p, i);
    if (hit(p, i)) ++c;
    return c;
  }

  PatternVector vec(const Permutation& p, int i) {
    PatternVector v = mesh_.refined_vector(p, i);
    if (hit(p, i) && !v.empty()) ++v[0];
    return v;
  }

 private:
  bool hit(const Permutation& p, int i) const {
    return fault_.pattern_index == i && p.size() >= 1 && p[p.size()] == 2;
  }

  MeshStats mesh_;
  FaultInjection fault_;
};

// Walks S_n in rank order. make() builds a per-worker check returning a
// Mismatch; the earliest failing rank wins whatever the chunking.
template <class Make>
Failure scan(int n, int jobs, Make make) {
  const auto parts = map_rank_chunks<Failure>(n, jobs, [&](RankRange range) -> Failure {
    auto check = make();
    for (PermutationCursor cursor(n, range); !cursor.done(); cursor.advance()) {
      if (Mismatch bad = check(cursor.current())) {
        return Counterexample{n, cursor.current().to_string(), std::move(bad->first), std::move(bad->second)};
      }
    }
    return std::nullopt;
  });
  for (const Failure& f : parts) {
    if (f) return f;
  }
  return std::nullopt;
}

Failure scan_list(int n, const std::vector<Permutation>& perms, int jobs,
                  const std::function<Mismatch(const Permutation&)>& check) {
  const std::size_t chunks = jobs <= 1 ? 1 : static_cast<std::size_t>(jobs) * kChunksPerWorker;
  const std::size_t total = perms.size();
  const std::size_t used = std::min(chunks, std::max<std::size_t>(total, 1));
  const auto parts = run_indexed<Failure>(used, jobs, [&](std::size_t i) -> Failure {
    for (std::size_t c = total * i / used; c < total * (i + 1) / used; ++c) {
      if (Mismatch bad = check(perms[c])) return Counterexample{n, perms[c].to_string(), bad->first, bad->second};
    }
    return std::nullopt;
  });
  for (const Failure& f : parts) {
    if (f) return f;
  }
  return std::nullopt;
}

Failure count_failure(int n, const BigInt& expected, const BigInt& actual) {
  if (expected == actual) return std::nullopt;
  return Counterexample{n, std::nullopt, expected.str(), actual.str()};
}

// ---- joint-distribution symmetry -------------------------------------------

using PairStat = std::function<std::pair<std::uint64_t, std::uint64_t>(const Permutation&)>;
using PairStatFactory = std::function<PairStat()>;

// The joint distribution of (f,g) over S_n equals that of (g,f). On failure
// the witness is the least permutation whose value pair sits in an
// unbalanced cell.
Failure symmetry_check(int n, int jobs, const PairStatFactory& make, const std::string& f_name,
                       const std::string& g_name) {
  using Dist = std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>;
  const auto parts = map_rank_chunks<Dist>(n, jobs, [&](RankRange range) {
    PairStat stat = make();
    Dist local;
    for_each_permutation(n, range, [&](const Permutation& p) { ++local[stat(p)]; });
    return local;
  });
  Dist dist;
  for (const Dist& part : parts) {
    for (const auto& [key, c] : part) dist[key] += c;
  }
  auto at = [&](std::uint64_t a, std::uint64_t b) {
    const auto it = dist.find({a, b});
    return it == dist.end() ? std::uint64_t{0} : it->second;
  };
  const bool symmetric = std::all_of(dist.begin(), dist.end(), [&](const auto& kv) {
    return kv.second == at(kv.first.second, kv.first.first);
  });
  if (symmetric) return std::nullopt;
  return scan(n, jobs, [&] {
    return [stat = make(), &at, &f_name, &g_name](const Permutation& p) mutable -> Mismatch {
      const auto [k, l] = stat(p);
      if (at(k, l) == at(l, k)) return std::nullopt;
      const std::string cell = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      return std::make_pair("#{(" + g_name + "," + f_name + ") = " + cell + "} = " + std::to_string(at(l, k)),
                            "#{(" + f_name + "," + g_name + ") = " + cell + "} = " + std::to_string(at(k, l)));
    };
  });
}

Checker pair_symmetry(int pair) {
  return [pair](Context& ctx) {
    const int a = 2 * pair - 1, b = 2 * pair;
    const FaultInjection fault = ctx.options.fault;
    return symmetry_check(
        ctx.n, ctx.options.jobs,
        [=] {
          auto stats = std::make_shared<ClaimStats>(fault);
          return PairStat([=](const Permutation& p) { return std::make_pair(stats->count(p, a), stats->count(p, b)); });
        },
        "P" + std::to_string(a), "P" + std::to_string(b));
  };
}

Checker flipped_pair_symmetry(int pair) {
  return [pair](Context& ctx) {
    const int a = 2 * pair - 1, b = 2 * pair;
    const MeshPattern fa = flip_diagonal(catalog("P" + std::to_string(a)));
    const MeshPattern fb = flip_diagonal(catalog("P" + std::to_string(b)));
    return symmetry_check(
        ctx.n, ctx.options.jobs,
        [&] {
          auto ma = std::make_shared<Matcher>(fa);
          auto mb = std::make_shared<Matcher>(fb);
          return PairStat([=](const Permutation& p) { return std::make_pair(ma->count(p), mb->count(p)); });
        },
        "flip(P" + std::to_string(a) + ")", "flip(P" + std::to_string(b) + ")");
  };
}

// ---- pointwise identities ----------------------------------------------------

Failure quintuple(Context& ctx) {
  const FaultInjection fault = ctx.options.fault;
  return scan(ctx.n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      const Permutation q = phi(p);
      auto side = [&](const Permutation& x, int v3, int v4, int v7, int v8) {
        return std::vector<std::string>{std::to_string(lrmin(x)), vector_string(stats->vec(x, v3)),
                                        vector_string(stats->vec(x, v4)), vector_string(stats->vec(x, v7)),
                                        vector_string(stats->vec(x, v8))};
      };
      const auto lhs = side(p, 3, 4, 7, 8);
      const auto rhs = side(q, 4, 3, 8, 7);
      if (lhs == rhs) return std::nullopt;
      return std::make_pair("(lrmin,vecP4,vecP3,vecP8,vecP7)(phi) = " + tuple_string(rhs),
                            "(lrmin,vecP3,vecP4,vecP7,vecP8) = " + tuple_string(lhs));
    };
  });
}

Failure quadruple(Context& ctx) {
  const FaultInjection fault = ctx.options.fault;
  return scan(ctx.n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      const Permutation q = psi(p);
      auto side = [&](const Permutation& x, std::initializer_list<int> order) {
        std::vector<std::string> out;
        for (int i : order) out.push_back(std::to_string(stats->count(x, i)));
        return out;
      };
      const auto lhs = side(p, {9, 10, 11, 12});
      const auto rhs = side(q, {10, 9, 12, 11});
      if (lhs == rhs) return std::nullopt;
      return std::make_pair("(P10,P9,P12,P11)(psi) = " + tuple_string(rhs), "(P9,P10,P11,P12) = " + tuple_string(lhs));
    };
  });
}

Failure theta_swap(Context& ctx) {
  const FaultInjection fault = ctx.options.fault;
  return scan(ctx.n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      const Permutation q = big_theta(p);
      const std::vector<std::string> lhs{std::to_string(stats->count(p, 13)), std::to_string(stats->count(p, 14))};
      const std::vector<std::string> rhs{std::to_string(stats->count(q, 14)), std::to_string(stats->count(q, 13))};
      if (lhs == rhs) return std::nullopt;
      return std::make_pair("(P14,P13)(theta) = " + tuple_string(rhs), "(P13,P14) = " + tuple_string(lhs));
    };
  });
}

Checker involutive(Involution which) {
  return [which](Context& ctx) {
    return scan(ctx.n, ctx.options.jobs, [which] {
      return [which](const Permutation& p) -> Mismatch {
        const Permutation once = apply(which, p);
        const Permutation twice = apply(which, once);
        if (twice == p) return std::nullopt;
        return std::make_pair(p.to_string(), twice.to_string());
      };
    });
  };
}

Failure p9_p12_equidistribution(Context& ctx) {
  const int n = ctx.n;
  using Counts = std::array<std::map<std::uint64_t, std::uint64_t>, 4>;
  const FaultInjection fault = ctx.options.fault;
  const auto parts = map_rank_chunks<Counts>(n, ctx.options.jobs, [&](RankRange range) {
    ClaimStats stats(fault);
    Counts local;
    for_each_permutation(n, range, [&](const Permutation& p) {
      for (int j = 0; j < 4; ++j) ++local[j][stats.count(p, 9 + j)];
    });
    return local;
  });
  Counts total;
  for (const Counts& part : parts) {
    for (int j = 0; j < 4; ++j) {
      for (const auto& [v, c] : part[j]) total[j][v] += c;
    }
  }
  auto show = [](const std::map<std::uint64_t, std::uint64_t>& d) {
    std::string out;
    for (const auto& [v, c] : d) out += (out.empty() ? "" : " ") + std::to_string(v) + ":" + std::to_string(c);
    return out;
  };
  for (int j = 1; j < 4; ++j) {
    if (total[j] != total[0]) {
      return Counterexample{n, std::nullopt, "P9 " + show(total[0]), "P" + std::to_string(9 + j) + " " + show(total[j])};
    }
  }
  return std::nullopt;
}

// ---- characterization vs matcher --------------------------------------------

Failure active_pair_lemma(Context& ctx) {
  const FaultInjection fault = ctx.options.fault;
  return scan(ctx.n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      for (int i = 1; i <= 8; ++i) {
        const std::uint64_t fast = fast_count(p, i), mesh = stats->count(p, i);
        if (fast != mesh) {
          return std::make_pair("P" + std::to_string(i) + " active pairs = " + std::to_string(fast),
                                "P" + std::to_string(i) + " occurrences = " + std::to_string(mesh));
        }
      }
      for (int i : {3, 4, 7, 8}) {
        const PatternVector fast = refined_vector(p, i), mesh = stats->vec(p, i);
        if (fast != mesh) {
          return std::make_pair("vecP" + std::to_string(i) + " from active pairs = " + vector_string(fast),
                                "vecP" + std::to_string(i) + " occurrences = " + vector_string(mesh));
        }
      }
      return std::nullopt;
    };
  });
}

Failure middle_entries(Context& ctx) {
  const FaultInjection fault = ctx.options.fault;
  return scan(ctx.n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      for (int i = 9; i <= 12; ++i) {
        const std::uint64_t fast = fast_count(p, i), mesh = stats->count(p, i);
        if (fast != mesh) {
          return std::make_pair("P" + std::to_string(i) + " characterization = " + std::to_string(fast),
                                "P" + std::to_string(i) + " occurrences = " + std::to_string(mesh));
        }
      }
      return std::nullopt;
    };
  });
}

Failure lehmer_lemma(Context& ctx) {
  const FaultInjection fault = ctx.options.fault;
  return scan(ctx.n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      const auto [m0, m1] = p13_p14_fast(p);
      const std::uint64_t c13 = stats->count(p, 13), c14 = stats->count(p, 14);
      if (m0 == c13 && m1 == c14) return std::nullopt;
      return std::make_pair("(|M0|,|M1|) = (" + std::to_string(m0) + "," + std::to_string(m1) + ")",
                            "(P13,P14) = (" + std::to_string(c13) + "," + std::to_string(c14) + ")");
    };
  });
}

// ---- generating functions ------------------------------------------------------

Failure f_recurrence(Context& ctx) {
  const int n = ctx.n;
  const BivariatePolynomial brute = f_poly_bruteforce(n, ctx.options.jobs);
  ctx.report.observed.emplace_back(n, brute.to_string());
  const BivariatePolynomial rec = f_poly_recurrence(n);
  if (!(rec == brute)) return Counterexample{n, std::nullopt, rec.to_string(), brute.to_string()};
  if (n >= 2) {
    const BivariatePolynomial star = f_star_recurrence(n);
    const BivariatePolynomial reduced = brute - BivariatePolynomial(brute.constant_term());
    if (!(star == reduced)) {
      return Counterexample{n, std::nullopt, "F*: " + star.to_string(), "F - F(0,0): " + reduced.to_string()};
    }
  }
  return std::nullopt;
}

Failure f_symmetry(Context& ctx) {
  const int n = ctx.n;
  const BivariatePolynomial f = f_poly_bruteforce(n, ctx.options.jobs);
  if (!(f.swapped() == f)) return Counterexample{n, std::nullopt, f.swapped().to_string(), f.to_string()};
  const auto coords = f.in_sum_basis();
  if (!coords) return Counterexample{n, std::nullopt, "polynomial in s+t", f.to_string()};
  std::string shown;
  for (std::size_t d = 0; d < coords->size(); ++d) {
    if ((*coords)[d] < 0) return Counterexample{n, std::nullopt, "nonnegative coefficients in (s+t)^d", f.to_string()};
    shown += (d ? "," : "") + (*coords)[d].str();
  }
  ctx.report.observed.emplace_back(n, "(s+t)-basis [" + shown + "]");
  return std::nullopt;
}

Failure f_zero_locus(Context& ctx) {
  const int n = ctx.n;
  const BivariatePolynomial f = f_poly_bruteforce(n, ctx.options.jobs);
  const BigInt expected = n == 1 ? BigInt(1) : 2 * factorial(n - 1);
  ctx.report.observed.emplace_back(n, f.constant_term().str());
  if (f.constant_term() != expected) {
    return Counterexample{n, std::nullopt, "F(0,0) = " + expected.str(), "F(0,0) = " + f.constant_term().str()};
  }
  const FaultInjection fault = ctx.options.fault;
  return scan(n, ctx.options.jobs, [fault] {
    return [stats = std::make_shared<ClaimStats>(fault)](const Permutation& p) -> Mismatch {
      const int len = p.size();
      const bool zero = stats->count(p, 13) == 0 && stats->count(p, 14) == 0;
      const bool locus = p[len] == 1 || (len >= 2 && p[len - 1] == 1);
      if (zero == locus) return std::nullopt;
      return std::make_pair(std::string(locus ? "P13 = P14 = 0" : "P13 + P14 > 0"),
                            std::string(zero ? "P13 = P14 = 0" : "P13 + P14 > 0"));
    };
  });
}

Failure s_functional(Context& ctx) {
  const int n = ctx.n;
  const UnivariatePolynomial brute = s_poly_bruteforce(n);
  ctx.report.observed.emplace_back(n, brute.to_string());
  const UnivariatePolynomial rec = s_poly_recurrence(n);
  if (!(rec == brute)) return Counterexample{n, std::nullopt, rec.to_string(), brute.to_string()};
  // [x^n] of (1-x)C(x) + x S(xt,t)
  UnivariatePolynomial rhs(std::vector<BigInt>{n == 0 ? catalan(0) : catalan(n) - catalan(n - 1)});
  if (n >= 1) rhs += s_poly_bruteforce(n - 1).shifted(n - 1);
  if (!(rhs == brute)) return Counterexample{n, std::nullopt, rhs.to_string(), brute.to_string()};
  if (brute.evaluate(1) != catalan(n)) {
    return Counterexample{n, std::nullopt, "S(1) = " + catalan(n).str(), "S(1) = " + brute.evaluate(1).str()};
  }
  if (n >= 2 && brute.evaluate(0) != catalan(n) - catalan(n - 1)) {
    return Counterexample{n, std::nullopt, "S(0) = " + (catalan(n) - catalan(n - 1)).str(),
                          "S(0) = " + brute.evaluate(0).str()};
  }
  // [x^n] (x C(x)^2 - C(x) + 1)
  BigInt identity = n == 0 ? BigInt(0) : -catalan(n);
  for (int i = 0; i + 1 <= n; ++i) identity += catalan(i) * catalan(n - 1 - i);
  if (identity != 0) return Counterexample{n, std::nullopt, "[x^n](xC^2 - C + 1) = 0", identity.str()};
  return std::nullopt;
}

// ---- enumeration ---------------------------------------------------------------

Checker class_count(std::vector<std::string> names, std::function<BigInt(int)> formula) {
  return [names = std::move(names), formula = std::move(formula)](Context& ctx) {
    std::vector<MeshPattern> patterns;
    for (const std::string& name : names) patterns.push_back(parse_pattern(name));
    const ClassResult found = enumerate_class({patterns, ctx.n, false}, ctx.options.jobs);
    ctx.report.observed.emplace_back(ctx.n, found.count.str());
    return count_failure(ctx.n, formula(ctx.n), found.count);
  };
}

// The least permutation in exactly one of two sorted lists.
std::optional<Permutation> first_difference(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      return a[i] < b[j] ? a[i] : b[j];
    }
  }
  if (i < a.size()) return a[i];
  if (j < b.size()) return b[j];
  return std::nullopt;
}

Failure ad3(Context& ctx) {
  const int n = ctx.n;
  const ClassResult found = enumerate_class({{catalog("A"), catalog("D", 3)}, n, true}, ctx.options.jobs);
  ctx.report.observed.emplace_back(n, found.count.str());
  if (Failure f = count_failure(n, n - 1, found.count)) return f;
  const std::vector<Permutation> expected = rotation_class(n);
  if (const auto witness = first_difference(*found.members, expected)) {
    const bool in_class = std::binary_search(found.members->begin(), found.members->end(), *witness);
    return Counterexample{n, witness->to_string(), in_class ? "not in S_n(A,D3)" : "in S_n(A,D3)",
                          in_class ? "in S_n(A,D3)" : "not in S_n(A,D3)"};
  }
  return std::nullopt;
}

Failure corners(Context& ctx) {
  const int n = ctx.n;
  std::vector<int> ks;
  for (int k : ctx.spec.params) {
    if (k < 2) throw DomainError("corner proposition needs k >= 2");
    if (k <= n) ks.push_back(k);
  }
  std::string seen;
  for (int k : ks) seen += (seen.empty() ? "k=" : ",k=") + std::to_string(k);
  if (!ks.empty()) ctx.report.observed.emplace_back(n, seen);
  return scan(n, ctx.options.jobs, [ks] {
    struct Group {
      int k;
      Matcher a, at, d, dt;
    };
    auto groups = std::make_shared<std::vector<Group>>();
    for (int k : ks) {
      groups->push_back({k, Matcher(catalog("A", k)), Matcher(catalog("At", k)), Matcher(catalog("D", k)),
                         Matcher(catalog("Dt", k))});
    }
    return [groups](const Permutation& p) -> Mismatch {
      for (Group& g : *groups) {
        const std::string k = std::to_string(g.k);
        const bool a = g.a.contains(p), at = g.at.contains(p);
        if (a != at) {
          return std::make_pair(std::string(a ? "contains " : "avoids ") + "A" + k,
                                std::string(at ? "contains " : "avoids ") + "At" + k);
        }
        const bool d = g.d.contains(p), dt = g.dt.contains(p);
        if (d != dt) {
          return std::make_pair(std::string(d ? "contains " : "avoids ") + "D" + k,
                                std::string(dt ? "contains " : "avoids ") + "Dt" + k);
        }
      }
      return std::nullopt;
    };
  });
}

Failure ak_family(Context& ctx) {
  const int n = ctx.n;
  std::string seen;
  for (int k : ctx.spec.params) {
    const ClassResult found =
        enumerate_class({{parse_pattern("132"), catalog("A", k)}, n, false}, ctx.options.jobs);
    seen += (seen.empty() ? "k=" : " k=") + std::to_string(k) + ":" + found.count.str();
    const BigInt expected = formula_132_family(Family132::Ak, n, k);
    if (expected != found.count) {
      ctx.report.observed.emplace_back(n, seen);
      return Counterexample{n, std::nullopt, "k=" + std::to_string(k) + ": " + expected.str(),
                            "k=" + std::to_string(k) + ": " + found.count.str()};
    }
  }
  ctx.report.observed.emplace_back(n, seen);
  return std::nullopt;
}

Failure catalan_132(Context& ctx) {
  const int n = ctx.n;
  const std::vector<Permutation> generated = avoiders_132(n);
  ctx.report.observed.emplace_back(n, std::to_string(generated.size()));
  if (Failure f = count_failure(n, catalan(n), generated.size())) return f;
  if (std::adjacent_find(generated.begin(), generated.end(),
                         [](const Permutation& a, const Permutation& b) { return !(a < b); }) != generated.end()) {
    return Counterexample{n, std::nullopt, "strictly increasing listing", "repeated or unsorted listing"};
  }
  const MeshPattern p132 = parse_pattern("132");
  const auto bad = scan_list(n, generated, ctx.options.jobs, [&p132](const Permutation& p) -> Mismatch {
    if (count(p, p132) == 0) return std::nullopt;
    return std::make_pair(std::string("avoids 132"), std::string("contains 132"));
  });
  if (bad) return bad;
  if (n <= 9) {
    // The generator against a plain filter of S_n.
    const std::vector<MeshPattern> only{p132};
    const auto parts = map_rank_chunks<std::uint64_t>(n, ctx.options.jobs, [&](RankRange range) {
      AvoidanceFilter filter(only);
      std::uint64_t c = 0;
      for_each_permutation(n, range, [&](const Permutation& p) { c += filter.avoids(p) ? 1 : 0; });
      return c;
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : parts) total += c;
    if (Failure f = count_failure(n, generated.size(), total)) return f;
  }
  return std::nullopt;
}

Failure auxiliary(Context& ctx) {
  const int n = ctx.n;
  const ClassResult found = enumerate_class({{parse_pattern("132"), parse_pattern("321")}, n - 1, false});
  ctx.report.observed.emplace_back(n, found.count.str());
  return count_failure(n, binomial(n - 1, 2) + 1, found.count);
}

Failure a3d3_reversal(Context& ctx) {
  const ClassResult found =
      enumerate_class({{catalog("A", 3), catalog("D", 3)}, ctx.n, true}, ctx.options.jobs);
  for (const Permutation& p : *found.members) {
    const Permutation r = reverse(p);
    if (!std::binary_search(found.members->begin(), found.members->end(), r)) {
      return Counterexample{ctx.n, p.to_string(), "reverse in S_n(A3,D3)", "reverse " + r.to_string() + " not in class"};
    }
  }
  return std::nullopt;
}

// ---- registry -------------------------------------------------------------------

constexpr int kFactorialMax = 9;
constexpr int kCatalanMax = 12;

std::vector<Entry> build_registry() {
  std::vector<Entry> r;
  auto add = [&](std::string id, std::string statement, int lo, int hi, Checker check,
                 std::vector<int> params = {}, std::vector<std::string> notes = {}) {
    r.push_back({ClaimInfo{std::move(id), std::move(statement), lo, hi, std::move(params)}, std::move(check),
                 std::move(notes)});
  };

  for (int c = 1; c <= 7; ++c) {
    const std::string a = "P" + std::to_string(2 * c - 1), b = "P" + std::to_string(2 * c);
    add("conj" + std::to_string(c),
        "#{sigma in S_n : " + a + "(sigma)=k, " + b + "(sigma)=l} = #{sigma in S_n : " + b + "(sigma)=k, " + a +
            "(sigma)=l} for all k, l",
        1, kFactorialMax, pair_symmetry(c));
  }
  for (int c = 1; c <= 7; ++c) {
    const std::string a = "P" + std::to_string(2 * c - 1), b = "P" + std::to_string(2 * c);
    add("conj" + std::to_string(c) + "-bar",
        "the joint distribution of (flip(" + a + "), flip(" + b + ")) over S_n is symmetric, flip being the "
        "diagonal reflection of a mesh pattern",
        1, kFactorialMax, flipped_pair_symmetry(c));
  }
  add("thm-quintuple", "(lrmin, vecP3, vecP4, vecP7, vecP8)(sigma) = (lrmin, vecP4, vecP3, vecP8, vecP7)(Phi(sigma))",
      1, kFactorialMax, quintuple);
  add("thm-quadruple", "(P9, P10, P11, P12)(sigma) = (P10, P9, P12, P11)(Psi(sigma))", 1, kFactorialMax, quadruple,
      {}, {"Psi fixes sigma when its active zone is empty"});
  add("thm-theta-swap", "(P13, P14)(sigma) = (P14, P13)(Theta(sigma)), Theta = L^-1 theta L", 1, kFactorialMax,
      theta_swap);
  add("involution-phi", "Phi(Phi(sigma)) = sigma, Phi(sigma' 1 sigma'') = sigma' 1 kappa(sigma'')", 1, kFactorialMax,
      involutive(Involution::Phi));
  add("involution-psi", "Psi(Psi(sigma)) = sigma, Psi complementing the values of the active zone", 1,
      kFactorialMax, involutive(Involution::Psi), {}, {"Psi fixes sigma when its active zone is empty"});
  add("involution-theta", "Theta(Theta(sigma)) = sigma", 1, kFactorialMax, involutive(Involution::Theta));
  add("remark-p9p12-equidistribution", "P9, P10, P11 and P12 have the same distribution over S_n", 1, kFactorialMax,
      p9_p12_equidistribution);
  add("lemma-active-pairs",
      "for i = 1..8 the P_i occurrences correspond to the P_i-active pairs given by right-to-left extrema, "
      "and vecP_i (i = 3,4,7,8) is read off the active-pair gaps",
      1, kFactorialMax, active_pair_lemma);
  add("lemma-middle-entries", "P9..P12 occurrence counts equal their middle-letter characterizations", 1,
      kFactorialMax, middle_entries);
  add("lemma-lehmer-p13p14", "P13(sigma) = |M0(L(sigma))| and P14(sigma) = |M1(L(sigma))|", 1, kFactorialMax,
      lehmer_lemma);
  add("thm-F-recurrence",
      "F_n(s,t) = n(n-2)! + (n-2+s+t)(F_{n-1}(s,t) - (n-2)!), F_1 = 1, F_2 = 2; "
      "F*_n = (n-2+s+t)F*_{n-1} + (n-2)!(s+t)",
      1, kFactorialMax, f_recurrence);
  add("F-symmetry", "F_n(s,t) = F_n(t,s), and F_n is a nonnegative combination of powers of (s+t)", 1,
      kFactorialMax, f_symmetry);
  add("F-zero-locus",
      "F_n(0,0) = 2(n-1)! and P13(sigma) = P14(sigma) = 0 iff sigma_{n-1} = 1 or sigma_n = 1", 1, kFactorialMax,
      f_zero_locus, {}, {"F_1(0,0) = 1: the only permutation of length 1 ends in 1"});
  add("thm-S-functional",
      "S(x,t) = (1-x)C(x) + x S(xt,t) with S_n(t) = sum over S_n(132) of t^A(sigma); "
      "equivalently S_n = (C_n - C_{n-1}) + t^{n-1} S_{n-1}",
      0, kCatalanMax, s_functional, {}, {"S_0(t) = 1 (the empty permutation), matching C_0 = 1"});
  add("catalan-132", "|S_n(132)| = C_n", 1, kCatalanMax, catalan_132,
      {}, {"for n <= 9 the generator is also checked against a filter of all of S_n"});
  add("table1-row1", "|S_n(A, D)| = 0 for n >= 2", 2, 10, class_count({"A", "D"}, [](int) { return BigInt(0); }));
  add("table1-row2", "|S_n(A, D3)| = n - 1", 2, 10, class_count({"A", "D3"}, [](int n) { return BigInt(n - 1); }));
  add("thm-AD3", "S_n(A, D3) = { a(a+1)...n 12...(a-1) : 2 <= a <= n }, so |S_n(A, D3)| = n - 1", 2, 10, ad3);
  add("table1-row3", "|S_n(A3, D3)| = 2^(n-1)", 1, 10,
      class_count({"A3", "D3"}, [](int n) { return BigInt(1) << (n - 1); }));
  add("closure-A3D3-reverse", "S_n(A3, D3) is closed under reversal", 1, 10, a3d3_reversal);
  add("table1-row4", "|S_n(132, A)| = C_n - C_{n-1} (n >= 2), 1 for n = 1", 1, kCatalanMax,
      class_count({"132", "A"}, [](int n) { return formula_132_family(Family132::A, n); }));
  add("table1-row5", "|S_n(132, A_k)| = C_n - C_{n-1} + |S_{n-1}(132, 12...(k-1))|", 1, 11, ak_family, {3, 4, 5},
      {"|S_0(132, 12...(k-1))| = 1 (the empty permutation)"});
  add("table1-row6", "|S_n(132, D)| = C_{n-1}", 1, kCatalanMax,
      class_count({"132", "D"}, [](int n) { return formula_132_family(Family132::D, n); }));
  add("table1-row7", "|S_n(132, D3)| = C_{n-1} + n - 1", 1, kCatalanMax,
      class_count({"132", "D3"}, [](int n) { return formula_132_family(Family132::D3, n); }));
  add("table1-row8", "|S_n(132, D4)| = C_{n-1} + (n-1)(2n^2 - 7n + 12)/6", 1, kCatalanMax,
      class_count({"132", "D4"}, [](int n) { return formula_132_family(Family132::D4, n); }));
  add("prop-corners", "S_n(A_k) = S_n(At_k) and S_n(D_k) = S_n(Dt_k) for n >= k", 2, kFactorialMax, corners,
      {2, 3, 4});
  add("auxiliary-132-321", "|S_{n-1}(132, 321)| = binom(n-1, 2) + 1", 1, kCatalanMax, auxiliary,
      {}, {"|S_0(132, 321)| = 1 (the empty permutation)"});
  return r;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = build_registry();
  return entries;
}

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"prop-AD-empty", "table1-row1"},
      {"thm-A3D3", "table1-row3"},
      {"genfun-F", "thm-F-recurrence"},
      {"genfun-S", "thm-S-functional"},
  };
  return table;
}

const Entry& find_entry(std::string_view id) {
  const std::string canonical = resolve_claim_id(id);
  for (const Entry& e : registry()) {
    if (e.info.id == canonical) return e;
  }
  throw UnknownClaim("unknown claim: " + std::string(id));
}

std::optional<int> env_cap() {
  const char* raw = std::getenv("MESHPERM_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 0) throw InvalidInput("MESHPERM_MAX_N must be a nonnegative integer");
  return static_cast<int>(value);
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::string resolve_claim_id(std::string_view id) {
  if (const auto it = aliases().find(id); it != aliases().end()) return it->second;
  for (const Entry& e : registry()) {
    if (e.info.id == id) return e.info.id;
  }
  throw UnknownClaim("unknown claim: " + std::string(id));
}

ClaimSpec default_spec(std::string_view id) {
  const Entry& e = find_entry(id);
  return ClaimSpec{e.info.id, e.info.n_min, e.info.n_max, e.info.params};
}

int clipped_max_n(int n_max, const VerifyOptions& options) {
  int hi = n_max;
  if (options.max_n > 0) hi = std::min(hi, options.max_n);
  if (const auto cap = env_cap()) hi = std::min(hi, *cap);
  return hi;
}

VerificationReport run_claim(const ClaimSpec& spec, const VerifyOptions& options) {
  const Entry& entry = find_entry(spec.id);
  if (spec.n_min > spec.n_max) throw InvalidInput("empty n range for " + spec.id);
  if (spec.n_min < 0) throw InvalidInput("negative n in range for " + spec.id);
  if (options.fault.pattern_index < 0 || options.fault.pattern_index > 14) {
    throw InvalidInput("fault pattern index must be in 0..14");
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = entry.info.id;
  report.statement = entry.info.statement;
  report.n_min = spec.n_min;
  report.n_max = clipped_max_n(spec.n_max, options);
  report.params = spec.params;
  report.notes = entry.notes;
  report.workers = std::max(1, options.jobs);
  if (report.n_max < spec.n_max) {
    report.notes.push_back("range clipped from n <= " + std::to_string(spec.n_max));
  }
  if (report.n_max < report.n_min) report.notes.push_back("empty range after clipping; nothing to check");

  ClaimSpec effective = spec;
  effective.id = entry.info.id;
  for (int n = report.n_min; n <= report.n_max; ++n) {
    Context ctx{n, effective, options, report};
    if (Failure failure = entry.check(ctx)) {
      report.passed = false;
      report.counterexample = std::move(failure);
      break;
    }
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> run_all(const VerifyOptions& options) {
  if (options.max_n < 1) throw DomainError("run_all needs max_n >= 1");
  std::vector<VerificationReport> reports;
  for (const Entry& e : registry()) {
    reports.push_back(run_claim(ClaimSpec{e.info.id, e.info.n_min, e.info.n_max, e.info.params}, options));
  }
  return reports;
}

}  // namespace meshperm
