#include <doctest.h>

#include <set>

#include "bridge.hpp"
#include "errors.hpp"
#include "stats.hpp"

using namespace meshperm;

namespace {

// Occurrence value triples written the way the worked examples print them:
// entries above 9 in parentheses.
std::set<std::string> occurrence_set(const Permutation& host, int i) {
  std::set<std::string> out;
  for (const Occurrence& o : occurrences(host, catalog("P" + std::to_string(i)))) {
    std::string s;
    for (int v : o.values) s += v < 10 ? std::to_string(v) : "(" + std::to_string(v) + ")";
    out.insert(s);
  }
  return out;
}

using Set = std::set<std::string>;

}  // namespace

TEST_CASE("occurrence sets of the phi example") {
  const Permutation s = Permutation::parse("461928753");
  const Permutation t = Permutation::parse("461293578");
  CHECK(occurrence_set(s, 1) == Set{"128"});
  CHECK(occurrence_set(s, 2) == Set{"192", "153"});
  CHECK(occurrence_set(s, 3) == Set{"128"});
  CHECK(occurrence_set(s, 4) == Set{"192", "183", "173", "153"});
  CHECK(occurrence_set(t, 2) == Set{"193"});
  CHECK(occurrence_set(t, 1) == Set{"129", "478"});
  CHECK(occurrence_set(t, 4) == Set{"193"});
  CHECK(occurrence_set(t, 3) == Set{"129", "138", "458", "478"});
  CHECK(occurrence_set(s, 5) == Set{"128"});
  CHECK(occurrence_set(s, 6) == Set{"192", "253"});
  CHECK(occurrence_set(s, 7) == Set{"128"});
  CHECK(occurrence_set(s, 8) == Set{"192", "283", "273", "253"});
  CHECK(occurrence_set(t, 6) == Set{"293"});
  CHECK(occurrence_set(t, 5) == Set{"129", "578"});
  CHECK(occurrence_set(t, 8) == Set{"293"});
  CHECK(occurrence_set(t, 7) == Set{"129", "238", "358", "578"});
}

TEST_CASE("occurrence sets of the psi example") {
  const Permutation s = Permutation::parse("13,15,4,11,2,5,10,1,14,8,6,12,3,9,7");
  const Permutation t = Permutation::parse("13,15,4,6,2,12,7,1,14,9,11,5,3,8,10");
  CHECK(occurrence_set(s, 9) == Set{"457", "567"});
  CHECK(occurrence_set(s, 10) == Set{"4(11)7", "5(10)7", "587"});
  CHECK(occurrence_set(s, 11) == Set{"257", "167"});
  CHECK(occurrence_set(s, 12) == Set{"4(11)7", "5(10)7", "187"});
  CHECK(occurrence_set(t, 10) == Set{"6(12)(10)", "9(11)(10)"});
  CHECK(occurrence_set(t, 9) == Set{"46(10)", "67(10)", "79(10)"});
  CHECK(occurrence_set(t, 12) == Set{"2(12)(10)", "9(11)(10)"});
  CHECK(occurrence_set(t, 11) == Set{"46(10)", "27(10)", "19(10)"});
}

TEST_CASE("occurrence sets of the theta example") {
  const Permutation s = Permutation::parse("3,5,2,6,1,4,12,8,9,7,11,14,13,10");
  const Permutation t = Permutation::parse("3,5,2,6,1,7,12,4,8,10,9,14,11,13");
  CHECK(occurrence_set(s, 13) == Set{"147", "47(10)"});
  CHECK(occurrence_set(s, 14) == Set{"487", "497", "7(11)(10)", "7(13)(10)"});
  CHECK(occurrence_set(t, 14) == Set{"174", "8(10)9"});
  CHECK(occurrence_set(t, 13) == Set{"148", "489", "89(11)", "9(11)(13)"});
  CHECK(p13_p14_fast(s) == std::make_pair(std::uint64_t{2}, std::uint64_t{4}));
  CHECK(p13_p14_fast(t) == std::make_pair(std::uint64_t{4}, std::uint64_t{2}));
}

TEST_CASE("active pairs of the phi example") {
  const Permutation s = Permutation::parse("461928753");
  const auto p4 = active_pairs(s, 4);
  std::vector<std::pair<int, int>> pairs;
  for (const ActivePair& a : p4) pairs.emplace_back(a.x, a.y);
  CHECK(pairs == std::vector<std::pair<int, int>>{{9, 2}, {8, 3}, {7, 3}, {5, 3}});
  CHECK(active_pairs(s, 1).size() == 1);
  CHECK_THROWS_AS(active_pairs(s, 9), DomainError);
}

TEST_CASE("active pairs of the identity") {
  // P1, P5: only (n-1, n). P3, P7: every (x, n) with 2 <= x <= n-1. Even i: none.
  for (int n = 0; n <= 8; ++n) {
    const Permutation id = Permutation::identity(n);
    for (int i = 1; i <= 8; ++i) {
      const auto pairs = active_pairs(id, i);
      std::size_t expected = 0;
      if (n >= 3 && (i == 1 || i == 5)) expected = 1;
      if (n >= 3 && (i == 3 || i == 7)) expected = static_cast<std::size_t>(n - 2);
      REQUIRE(pairs.size() == expected);
      for (const ActivePair& a : pairs) CHECK(a.y == n);
      if (expected == 1) CHECK(pairs[0].x == n - 1);
      CHECK(pairs.size() == oracle::count(id, catalog("P" + std::to_string(i))));
    }
  }
}

TEST_CASE("characterization counts equal the oracle") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      for (int i = 1; i <= 14; ++i) {
        CHECK(fast_count(s, i) == oracle::count(s, catalog("P" + std::to_string(i))));
      }
    });
  }
}

TEST_CASE("refined vectors") {
  MeshStats mesh;
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& s) {
      for (int i : {3, 4, 7, 8}) {
        const PatternVector v = refined_vector(s, i);
        CHECK(v.size() == static_cast<std::size_t>(std::max(n - 2, 0)));
        CHECK(v == mesh.refined_vector(s, i));
        std::uint64_t total = 0;
        for (std::uint64_t x : v) total += x;
        CHECK(total == mesh.count(s, i));
        // adjacent final pair: the shaded-middle sibling
        if (!v.empty()) CHECK(v[0] == mesh.count(s, i - 2));
      }
    });
  }
  CHECK_THROWS_AS(refined_vector(Permutation{1}, 5), DomainError);
}

TEST_CASE("stat tuples") {
  const Permutation s = Permutation::parse("461928753");
  const std::vector<std::string> names{"lrmin", "P2", "vecP4"};
  const StatTuple fast = stat_tuple(s, names, StatEngine::Fast);
  const StatTuple mesh = stat_tuple(s, names, StatEngine::Mesh);
  CHECK(fast.same_values(mesh));
  CHECK(std::get<std::uint64_t>(fast.at("lrmin")) == 2);
  CHECK(std::get<std::uint64_t>(fast.at("P2")) == 2);
  CHECK(std::get<PatternVector>(fast.at("vecP4")) == PatternVector{2, 1, 1, 0, 0, 0, 0});
  const std::vector<std::string> bad{"P15"};
  CHECK_THROWS_AS(stat_tuple(s, bad), DomainError);
}

TEST_CASE("joint distribution") {
  const std::vector<MeshPattern> pair{catalog("P13"), catalog("P14")};
  const Distribution d = joint_distribution(pair, 4, 3);
  std::uint64_t total = 0;
  for (const auto& [key, c] : d) {
    total += c;
    CHECK(d.at({key[1], key[0]}) == c);
  }
  CHECK(total == 24);
  CHECK(d.at({0, 0}) == 12);
  CHECK(joint_distribution(pair, 6, 1) == joint_distribution(pair, 6, 4));
}
