#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "bpv/graph.hpp"
#include "doctest.h"

using namespace bpv;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Independent reference encoder used to pin expected graph6 strings: packs
// the upper-triangle bits by hand, straight from the format definition.
std::string reference_graph6(int n, const std::vector<std::pair<int, int>>& edge_list) {
  std::vector<int> bits(n * (n - 1) / 2, 0);
  int index = 0;
  std::vector<std::vector<int>> cell(n, std::vector<int>(n, 0));
  for (auto [u, v] : edge_list) cell[u][v] = cell[v][u] = 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits[index++] = cell[i][j];
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t start = 0; start < bits.size(); start += 6) {
    int value = 0;
    for (std::size_t t = 0; t < 6; ++t) value = value * 2 + (start + t < bits.size() ? bits[start + t] : 0);
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 decodes the empty graph on five vertices") {
  Graph g = from_graph6("D??");
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("graph6 decodes K5") {
  std::vector<std::pair<int, int>> k5_edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5_edges.emplace_back(u, v);
  CHECK(reference_graph6(5, k5_edges) == "D~{");
  CHECK(from_graph6("D~{") == Graph::complete(5));
  CHECK(to_graph6(Graph::complete(5)) == "D~{");
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    Graph g = random_graph(n, rng);
    std::string s = to_graph6(g);
    CHECK(from_graph6(s) == g);
    CHECK(to_graph6(from_graph6(s)) == s);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6(">"), std::invalid_argument);        // header below 63
  CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);      // extended header form
  CHECK_THROWS_AS(from_graph6("Q??"), std::invalid_argument);      // n = 18 > 16
  CHECK_THROWS_AS(from_graph6("D?"), std::invalid_argument);       // truncated
  CHECK_THROWS_AS(from_graph6("D???"), std::invalid_argument);     // trailing bytes
  CHECK_THROWS_AS(from_graph6("D\x20\x20"), std::invalid_argument);  // payload byte below 63
}

TEST_CASE("complement of K5 is empty") {
  CHECK(Graph::complete(5).complement() == Graph(5));
  CHECK(Graph(5).complement() == Graph::complete(5));
}

TEST_CASE("complement of C5 is isomorphic to C5") {
  Graph c5 = Graph::cycle(5);
  Graph co = c5.complement();
  // Brute force over all 5! relabelings.
  std::vector<int> perm{0, 1, 2, 3, 4};
  bool found = false;
  do {
    if (co.permuted(perm) == c5) found = true;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);
}

TEST_CASE("complement is an involution and splits the edge count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 17);
    Graph g = random_graph(n, rng);
    CHECK(g.complement().complement() == g);
    CHECK(g.complement().edge_count() == g.max_edge_count() - g.edge_count());
  }
}

TEST_CASE("graph invariants survive parsing, complement, and edits") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 15);
    Graph g = random_graph(n, rng);
    for (const Graph& h : {g, g.complement(), from_graph6(to_graph6(g))}) {
      for (int v = 0; v < h.vertex_count(); ++v) {
        CHECK(!h.has_edge(v, v));
        for (int u : h.neighbors(v)) {
          CHECK(u < h.vertex_count());
          CHECK(h.has_edge(u, v));
        }
      }
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling of C5") {
  Graph c5 = Graph::cycle(5);
  Graph canon = canonical_form(c5);
  std::vector<int> perm{0, 1, 2, 3, 4};
  do {
    CHECK(canonical_form(c5.permuted(perm)) == canon);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("4-vertex graphs fall into 11 canonical classes") {
  std::set<std::string> classes;
  for (int mask = 0; mask < 64; ++mask) {
    Graph g(4);
    int bit = 0;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    classes.insert(to_graph6(canonical_form(g)));
  }
  CHECK(classes.size() == 11);
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 9);
    Graph g = random_graph(n, rng);
    Graph c = canonical_form(g);
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("canonical form respects isomorphism on random graphs") {
  std::mt19937_64 rng(123456);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng);
    Graph h = g.permuted(random_permutation(n, rng));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical form separates the 6-vertex non-isomorphic pairs") {
  // C6 vs two triangles: same degree sequence, different graphs.
  Graph c6 = Graph::cycle(6);
  Graph triangles(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) triangles.add_edge(u, v);
  CHECK(canonical_form(c6) != canonical_form(triangles));
}

TEST_CASE("canonical form refuses n > 10") {
  CHECK_THROWS_AS(canonical_form(Graph(11)), std::invalid_argument);
}

TEST_CASE("connectivity within vertex sets") {
  Graph c5 = Graph::cycle(5);
  Graph co = c5.complement();
  CHECK(c5.connected_within(VertexSet{2}));
  // a2a4 is a non-edge of the 5-cycle, hence an edge of the complement.
  CHECK(!c5.connected_within(VertexSet{1, 3}));
  CHECK(co.connected_within(VertexSet{1, 3}));
  CHECK(!Graph(4).connected_within(VertexSet{0, 2}));
  CHECK_THROWS_AS(c5.connected_within(VertexSet{}), std::invalid_argument);
}

TEST_CASE("components and induced subgraphs") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(4, 5);
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3});
  CHECK(comps[2] == VertexSet{4, 5});
  CHECK(!g.is_connected());

  auto [sub, labels] = g.induced(VertexSet{1, 2, 4, 5});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edge_count() == 2);
  CHECK(sub.has_edge(0, 1));  // old 1-2
  CHECK(sub.has_edge(2, 3));  // old 4-5
  CHECK(labels == std::vector<int>{1, 2, 4, 5});

  Graph h = g.without_vertex(1);
  CHECK(h.vertex_count() == 5);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(3, 4));
}
