#include "bpv/kuratowski.hpp"

#include <stdexcept>

#include "bpv/planarity.hpp"

namespace bpv {

namespace {

bool has_cross_edge(const Graph& g, VertexSet a, VertexSet b) {
  for (int u : a)
    if (g.neighbors(u).intersects(b)) return true;
  return false;
}

}  // namespace

bool verify(const Graph& g, const KuratowskiCertificate& c) {
  std::size_t want_a = c.kind == CertificateKind::condition_i ? 3 : 5;
  std::size_t want_b = c.kind == CertificateKind::condition_i ? 3 : 0;
  if (c.parts_a.size() != want_a || c.parts_b.size() != want_b)
    throw std::invalid_argument("certificate: wrong number of parts");

  VertexSet all;
  for (const auto* parts : {&c.parts_a, &c.parts_b}) {
    for (VertexSet part : *parts) {
      if (part.empty()) throw std::invalid_argument("certificate: empty part");
      if (!part.subset_of(VertexSet::full(g.vertex_count())))
        throw std::invalid_argument("certificate: part member outside the graph");
      if (all.intersects(part)) throw std::invalid_argument("certificate: overlapping parts");
      all = all | part;
    }
  }

  for (const auto* parts : {&c.parts_a, &c.parts_b})
    for (VertexSet part : *parts)
      if (!g.connected_within(part)) return false;

  if (c.kind == CertificateKind::condition_i) {
    for (VertexSet a : c.parts_a)
      for (VertexSet b : c.parts_b)
        if (!has_cross_edge(g, a, b)) return false;
  } else {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (!has_cross_edge(g, c.parts_a[i], c.parts_a[j])) return false;
  }
  return true;
}

bool certified_nonplanar(const Graph& g, const KuratowskiCertificate& c) {
  if (!verify(g, c)) throw std::invalid_argument("certified_nonplanar: certificate fails verification");
  return !planar_decision(g);
}

}  // namespace bpv
