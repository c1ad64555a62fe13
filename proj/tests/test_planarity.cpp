#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bpv/planarity.hpp"
#include "doctest.h"

using namespace bpv;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("euler edge bound") {
  CHECK(euler_edge_bound(11) == 27);
  CHECK(euler_edge_bound(3) == 3);
  CHECK(euler_edge_bound(9) == 21);
  CHECK_THROWS_AS(euler_edge_bound(2), std::invalid_argument);
}

TEST_CASE("K4 is planar with a valid embedding") {
  auto result = is_planar(Graph::complete(4));
  REQUIRE(result.planar);
  REQUIRE(result.embedding.has_value());
  CHECK(!result.subdivision.has_value());
  CHECK(result.embedding->euler_ok());
  CHECK(result.embedding->faces().size() == 4);
}

TEST_CASE("K5 is nonplanar with a K5 witness") {
  auto result = is_planar(Graph::complete(5));
  REQUIRE(!result.planar);
  REQUIRE(result.subdivision.has_value());
  CHECK(result.subdivision->kind == SubdivisionKind::K5);
  CHECK(validate_witness(Graph::complete(5), *result.subdivision));
  for (const auto& path : result.subdivision->paths) CHECK(path.size() == 2);
}

TEST_CASE("K33 is nonplanar with a K33 witness") {
  Graph k33 = Graph::complete_bipartite(3, 3);
  auto result = is_planar(k33);
  REQUIRE(!result.planar);
  REQUIRE(result.subdivision.has_value());
  CHECK(result.subdivision->kind == SubdivisionKind::K33);
  CHECK(validate_witness(k33, *result.subdivision));
}

TEST_CASE("the Petersen graph is nonplanar and the oracle agrees") {
  Graph g = petersen();
  auto result = is_planar(g);
  CHECK(!result.planar);
  CHECK(validate_witness(g, *result.subdivision));
  auto oracle = subdivision_oracle(g);
  REQUIRE(oracle.has_value());
  CHECK(validate_witness(g, *oracle));
}

TEST_CASE("witness validation rejects corrupted witnesses") {
  auto result = is_planar(Graph::complete(5));
  SubdivisionWitness w = *result.subdivision;
  w.paths[0] = {w.branch_vertices[0], w.branch_vertices[0]};
  CHECK(!validate_witness(Graph::complete(5), w));
  SubdivisionWitness w2 = *result.subdivision;
  w2.branch_vertices[0] = w2.branch_vertices[1];
  CHECK(!validate_witness(Graph::complete(5), w2));
  // A witness must point at edges that exist.
  CHECK(!validate_witness(Graph(5), *result.subdivision));
}

TEST_CASE("oracle finds nothing in K5 minus an edge") {
  Graph g = Graph::complete(5);
  g.remove_edge(0, 1);
  CHECK(!subdivision_oracle(g).has_value());
  CHECK(planar_decision(g));
}

TEST_CASE("oracle finds a witness in K6") {
  auto w = subdivision_oracle(Graph::complete(6));
  REQUIRE(w.has_value());
  CHECK(validate_witness(Graph::complete(6), *w));
}

TEST_CASE("oracle refuses n > 10") {
  CHECK_THROWS_AS(subdivision_oracle(Graph(11)), std::invalid_argument);
}

TEST_CASE("decision and oracle agree on every graph with at most 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
      Graph g = graph_from_mask(n, mask);
      bool planar = planar_decision(g);
      bool has_subdivision = subdivision_oracle(g).has_value();
      REQUIRE(planar != has_subdivision);
    }
  }
}

TEST_CASE("quick reject: too many edges is always nonplanar") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 5 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, rng, 0.9);
    if (g.edge_count() > euler_edge_bound(n)) CHECK(!planar_decision(g));
  }
}

TEST_CASE("disconnected graphs: planar iff every component is") {
  // K5 plus a disjoint K4: the witness lands in the K5 component.
  Graph g(9);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  for (int u = 5; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) g.add_edge(u, v);
  auto result = is_planar(g);
  REQUIRE(!result.planar);
  CHECK(validate_witness(g, *result.subdivision));
  for (int b : result.subdivision->branch_vertices) CHECK(b < 5);

  // Two planar components embed fine, including the isolated vertex.
  Graph h(8);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) h.add_edge(u, v);
  h.add_edge(4, 5);
  h.add_edge(5, 6);
  auto hr = is_planar(h);
  REQUIRE(hr.planar);
  CHECK(hr.embedding->euler_ok());
}

TEST_CASE("random graphs: witnesses on both sides hold up") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    double p = 0.15 + 0.2 * static_cast<double>(rng() % 4);
    Graph g = random_graph(n, rng, p);
    auto result = is_planar(g);
    if (result.planar) {
      REQUIRE(result.embedding.has_value());
      CHECK(result.embedding->euler_ok());
      CHECK(result.embedding->graph() == g);
    } else {
      REQUIRE(result.subdivision.has_value());
      CHECK(validate_witness(g, *result.subdivision));
    }
    CHECK(result.planar == !subdivision_oracle(g).has_value());
  }
}
