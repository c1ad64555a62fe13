#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <deque>
#include <set>

#include "bpv/enumeration.hpp"
#include "doctest.h"

using namespace bpv;

namespace {

// Exhaustive filter oracle: every graph on n vertices with 3n-6 edges that
// is planar is maximal planar; collect their canonical forms.
std::set<std::string> exhaustive_triangulation_oracle(int n) {
  std::set<std::string> found;
  int bits = n * (n - 1) / 2;
  int want = 3 * n - 6;
  std::vector<int> positions(bits);
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    if (__builtin_popcount(mask) != want) continue;
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    if (planar_decision(g)) found.insert(to_graph6(canonical_form(g)));
  }
  return found;
}

// Second, independent generation order: flip closure from a single seed,
// scanning flips depth-first instead of breadth-first.
std::set<std::string> flip_closure_from_single_seed(int n) {
  const auto& smaller = enumerate_triangulations(n - 1).members;
  Graph seed = stellations(smaller.back()).front();
  std::set<std::string> known{to_graph6(seed)};
  std::vector<Graph> stack{seed};
  while (!stack.empty()) {
    Graph current = std::move(stack.back());
    stack.pop_back();
    auto next = flip_neighbors(current);
    for (auto it = next.rbegin(); it != next.rend(); ++it)
      if (known.insert(to_graph6(*it)).second) stack.push_back(*it);
  }
  return known;
}

}  // namespace

TEST_CASE("catalog counts match the exhaustive oracle for n = 4..6") {
  for (int n = 4; n <= 6; ++n) {
    auto oracle = exhaustive_triangulation_oracle(n);
    const auto& catalog = enumerate_triangulations(n);
    std::set<std::string> generated;
    for (const Graph& m : catalog.members) generated.insert(to_graph6(m));
    CHECK(generated == oracle);
  }
  CHECK(enumerate_triangulations(4).members.size() == 1);
  CHECK(enumerate_triangulations(5).members.size() == 1);
  CHECK(enumerate_triangulations(6).members.size() == 2);
}

TEST_CASE("catalog matches the exhaustive oracle for n = 7") {
  auto oracle = exhaustive_triangulation_oracle(7);
  const auto& catalog = enumerate_triangulations(7);
  std::set<std::string> generated;
  for (const Graph& m : catalog.members) generated.insert(to_graph6(m));
  CHECK(oracle.size() == 5);
  CHECK(generated == oracle);
}

TEST_CASE("catalog sizes for n = 8 and n = 9 under two generation orders") {
  CHECK(enumerate_triangulations(8).members.size() == 14);
  CHECK(enumerate_triangulations(9).members.size() == 50);
  for (int n : {8, 9}) {
    auto alt = flip_closure_from_single_seed(n);
    std::set<std::string> generated;
    for (const Graph& m : enumerate_triangulations(n).members) generated.insert(to_graph6(m));
    CHECK(alt == generated);
  }
}

TEST_CASE("catalog members are canonical, sorted, maximal planar") {
  for (int n = 4; n <= 9; ++n) {
    const auto& catalog = enumerate_triangulations(n);
    std::vector<std::string> keys;
    for (const Graph& m : catalog.members) {
      CHECK(m.vertex_count() == n);
      CHECK(m.edge_count() == 3 * n - 6);
      CHECK(planar_decision(m));
      CHECK(canonical_form(m) == m);
      keys.push_back(to_graph6(m));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  }
}

TEST_CASE("adding any non-edge to a catalog member breaks planarity") {
  for (int n : {6, 8, 9}) {
    for (const Graph& m : enumerate_triangulations(n).members) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (m.has_edge(u, v)) continue;
          Graph extended = m;
          extended.add_edge(u, v);
          CHECK(!planar_decision(extended));
        }
      }
    }
  }
}

TEST_CASE("enumerate_triangulations rejects out-of-range n") {
  CHECK_THROWS_AS(enumerate_triangulations(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_triangulations(10), std::invalid_argument);
}

TEST_CASE("verify_theorem1 certifies all fifty complements nonplanar") {
  auto report = verify_theorem1();
  CHECK(report.all_nonplanar);
  CHECK(report.entries.size() == 50);
  for (const auto& entry : report.entries) {
    Graph complement = entry.triangulation.complement();
    CHECK(complement.edge_count() == 36 - 21);
    CHECK(validate_witness(complement, entry.witness));
  }
  // Spot-check a few entries against the independent oracle.
  for (std::size_t i : {std::size_t{0}, std::size_t{25}, std::size_t{49}}) {
    Graph complement = report.entries[i].triangulation.complement();
    auto oracle = subdivision_oracle(complement);
    REQUIRE(oracle.has_value());
    CHECK(validate_witness(complement, *oracle));
  }
}

TEST_CASE("find_biplanar_k8 returns a valid decomposition of K8") {
  BiplanarPair pair = find_biplanar_k8();
  CHECK(!check_pair(pair, Graph::complete(8)).has_value());
  CHECK(pair.first.graph().edge_count() == 3 * 8 - 6);
  CHECK(pair.second.graph().edge_count() == 28 - 18);
  CHECK(is_triangulation(pair.first));
  CHECK(pair.second.euler_ok());
}
