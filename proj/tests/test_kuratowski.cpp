#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bpv/kuratowski.hpp"
#include "bpv/planarity.hpp"
#include "doctest.h"

using namespace bpv;

namespace {

KuratowskiCertificate singleton_cert(CertificateKind kind, const std::vector<int>& a, const std::vector<int>& b) {
  KuratowskiCertificate c;
  c.kind = kind;
  for (int v : a) c.parts_a.push_back(VertexSet{v});
  for (int v : b) c.parts_b.push_back(VertexSet{v});
  return c;
}

// Pentagon a1..a5 = 0..4 with hub v = 5 joined to every a_i, u = 6 on
// {a2,a3}, w = 7 on {a3,a4}: the chordless shape with a1 adjacent to
// neither u nor w.
Graph chordless_h() {
  Graph h(8);
  for (int i = 0; i < 5; ++i) h.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) h.add_edge(5, i);
  h.add_edge(6, 1);
  h.add_edge(6, 2);
  h.add_edge(7, 2);
  h.add_edge(7, 3);
  return h;
}

// Pentagon with one chord (a2,a5) = (1,4); v = 5 covers the quad face
// (a2..a5), u = 6 and w = 7 each touch two consecutive quad vertices.
Graph one_chord_h() {
  Graph h(8);
  for (int i = 0; i < 5; ++i) h.add_edge(i, (i + 1) % 5);
  h.add_edge(1, 4);
  for (int i = 1; i <= 4; ++i) h.add_edge(5, i);
  h.add_edge(6, 1);
  h.add_edge(6, 2);
  h.add_edge(7, 3);
  h.add_edge(7, 4);
  return h;
}

}  // namespace

TEST_CASE("K33 with six singleton parts satisfies condition (i)") {
  Graph k33 = Graph::complete_bipartite(3, 3);
  auto cert = singleton_cert(CertificateKind::condition_i, {0, 1, 2}, {3, 4, 5});
  CHECK(verify(k33, cert));
  CHECK(certified_nonplanar(k33, cert));
}

TEST_CASE("K5 with five singleton parts satisfies condition (ii)") {
  Graph k5 = Graph::complete(5);
  auto cert = singleton_cert(CertificateKind::condition_ii, {0, 1, 2, 3, 4}, {});
  CHECK(verify(k5, cert));
  CHECK(certified_nonplanar(k5, cert));
}

TEST_CASE("chordless-case complement certificate verifies") {
  Graph h = chordless_h();
  REQUIRE(planar_decision(h));
  Graph hbar = h.complement();
  KuratowskiCertificate cert;
  cert.kind = CertificateKind::condition_ii;
  cert.parts_a = {VertexSet{6}, VertexSet{7}, VertexSet{0}, VertexSet{1, 3}, VertexSet{2, 4}};
  CHECK(verify(hbar, cert));
  CHECK(certified_nonplanar(hbar, cert));
  CHECK(subdivision_oracle(hbar).has_value());
}

TEST_CASE("one-chord-case complement certificate verifies under condition (i)") {
  Graph h = one_chord_h();
  REQUIRE(planar_decision(h));
  Graph hbar = h.complement();
  KuratowskiCertificate cert;
  cert.kind = CertificateKind::condition_i;
  cert.parts_a = {VertexSet{6}, VertexSet{7}, VertexSet{0}};
  cert.parts_b = {VertexSet{5}, VertexSet{1, 3}, VertexSet{2, 4}};
  CHECK(verify(hbar, cert));
  CHECK(certified_nonplanar(hbar, cert));
  CHECK(subdivision_oracle(hbar).has_value());
}

TEST_CASE("verification fails on missing cross edges or disconnected parts") {
  Graph k33 = Graph::complete_bipartite(3, 3);
  // {0,1} is independent in K33, so that part is disconnected.
  KuratowskiCertificate cert;
  cert.kind = CertificateKind::condition_i;
  cert.parts_a = {VertexSet{0, 1}, VertexSet{2}, VertexSet{4}};
  cert.parts_b = {VertexSet{3}, VertexSet{5}, VertexSet{}};
  cert.parts_b[2] = VertexSet{0};  // placeholder replaced below
  cert.parts_b[2] = VertexSet{1};  // overlaps parts_a[0]
  CHECK_THROWS_AS(verify(k33, cert), std::invalid_argument);

  cert.parts_a = {VertexSet{0, 1}, VertexSet{2}, VertexSet{4}};
  cert.parts_b = {VertexSet{3}, VertexSet{5}, VertexSet{}};
  CHECK_THROWS_AS(verify(k33, cert), std::invalid_argument);  // empty part

  cert.parts_b = {VertexSet{3}, VertexSet{5}, VertexSet{8}};
  CHECK_THROWS_AS(verify(k33, cert), std::invalid_argument);  // outside the graph

  // Structurally fine but disconnected part: verdict false, no throw.
  auto k5cert = singleton_cert(CertificateKind::condition_ii, {0, 1, 2, 3}, {});
  k5cert.parts_a.push_back(VertexSet{4});
  Graph k5 = Graph::complete(5);
  k5.remove_edge(3, 4);
  CHECK(!verify(k5, k5cert));  // missing cross edge 3-4

  Graph sparse(6);
  sparse.add_edge(0, 1);
  auto cert2 = singleton_cert(CertificateKind::condition_i, {0, 1, 2}, {3, 4});
  cert2.parts_b.push_back(VertexSet{5});
  CHECK(!verify(sparse, cert2));
}

TEST_CASE("wrong part counts are structural errors") {
  auto cert = singleton_cert(CertificateKind::condition_ii, {0, 1, 2}, {});
  CHECK_THROWS_AS(verify(Graph::complete(5), cert), std::invalid_argument);
  auto cert2 = singleton_cert(CertificateKind::condition_i, {0, 1, 2}, {3, 4, 5});
  cert2.parts_b.pop_back();
  CHECK_THROWS_AS(verify(Graph::complete(6), cert2), std::invalid_argument);
}

TEST_CASE("certificates are monotone under edge additions") {
  std::mt19937_64 rng(2024);
  Graph base = Graph::complete_bipartite(3, 3);
  auto cert = singleton_cert(CertificateKind::condition_i, {0, 1, 2}, {3, 4, 5});
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = base;
    for (int extra = 0; extra < 3; ++extra) {
      int u = static_cast<int>(rng() % 6), v = static_cast<int>(rng() % 6);
      if (u != v) g.add_edge(u, v);
    }
    CHECK(verify(g, cert));
  }
}

TEST_CASE("certified_nonplanar refuses failing certificates") {
  Graph planar_g = Graph::cycle(6);
  auto cert = singleton_cert(CertificateKind::condition_i, {0, 1, 2}, {3, 4, 5});
  CHECK_THROWS_AS(certified_nonplanar(planar_g, cert), std::invalid_argument);
}
