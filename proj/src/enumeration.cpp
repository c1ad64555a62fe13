#include "bpv/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace bpv {

namespace {

RotationSystem embed_triangulation(const Graph& g) {
  auto result = is_planar(g);
  if (!result.planar || !is_triangulation(*result.embedding))
    throw std::logic_error("catalog member is not a triangulation");
  return std::move(*result.embedding);
}

bool graph6_less(const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); }

std::vector<Graph> dedup_sorted(std::vector<Graph> graphs) {
  std::sort(graphs.begin(), graphs.end(), graph6_less);
  graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
  return graphs;
}

TriangulationCatalog build_catalog(int n, const TriangulationCatalog* previous) {
  TriangulationCatalog catalog;
  catalog.n = n;
  if (n == 4) {
    catalog.members = {canonical_form(Graph::complete(4))};
    return catalog;
  }

  std::vector<Graph> seeds;
  for (const Graph& member : previous->members)
    for (const Graph& child : stellations(member)) seeds.push_back(child);
  seeds = dedup_sorted(seeds);

  // Close under diagonal flips; any two same-size triangulations are
  // flip-connected, so the closure of the stellation seeds is the whole
  // catalog.
  std::map<std::string, Graph> known;
  std::deque<Graph> queue;
  for (const Graph& seed : seeds) {
    known.emplace(to_graph6(seed), seed);
    queue.push_back(seed);
  }
  while (!queue.empty()) {
    Graph current = std::move(queue.front());
    queue.pop_front();
    for (const Graph& next : flip_neighbors(current)) {
      auto [it, fresh] = known.emplace(to_graph6(next), next);
      if (fresh) queue.push_back(next);
    }
  }
  for (auto& [key, graph] : known) catalog.members.push_back(graph);
  return catalog;
}

}  // namespace

const TriangulationCatalog& enumerate_triangulations(int n) {
  if (n < 4 || n > 9) throw std::invalid_argument("enumerate_triangulations: need 4 <= n <= 9");
  static const std::vector<TriangulationCatalog> catalogs = [] {
    std::vector<TriangulationCatalog> built;
    built.push_back(build_catalog(4, nullptr));
    for (int size = 5; size <= 9; ++size) built.push_back(build_catalog(size, &built.back()));
    return built;
  }();
  return catalogs[n - 4];
}

std::vector<Graph> stellations(const Graph& triangulation) {
  RotationSystem embedding = embed_triangulation(triangulation);
  int n = triangulation.vertex_count();
  std::vector<Graph> children;
  for (const Face& f : embedding.faces()) {
    Graph child(n + 1);
    for (auto [u, v] : triangulation.edges()) child.add_edge(u, v);
    for (int v : f.vertex_set()) child.add_edge(n, v);
    children.push_back(canonical_form(child));
  }
  return dedup_sorted(children);
}

std::vector<Graph> flip_neighbors(const Graph& triangulation) {
  RotationSystem embedding = embed_triangulation(triangulation);
  auto faces = embedding.faces();
  auto third_vertex = [&](int u, int v) {
    // The triangle traced through the arc u->v.
    for (const Face& f : faces) {
      for (int t = 0; t < 3; ++t) {
        if (f.boundary[t] == u && f.boundary[(t + 1) % 3] == v) return f.boundary[(t + 2) % 3];
      }
    }
    throw std::logic_error("arc not on any face");
  };

  std::vector<Graph> flips;
  for (auto [u, v] : triangulation.edges()) {
    int x = third_vertex(u, v);
    int y = third_vertex(v, u);
    if (x == y || triangulation.has_edge(x, y)) continue;
    Graph flipped = triangulation;
    flipped.remove_edge(u, v);
    flipped.add_edge(x, y);
    flips.push_back(canonical_form(flipped));
  }
  return dedup_sorted(flips);
}

Theorem1Report verify_theorem1() {
  Theorem1Report report;
  for (const Graph& member : enumerate_triangulations(9).members) {
    Graph complement = member.complement();
    auto result = is_planar(complement);
    if (result.planar) throw std::logic_error("verify_theorem1: a 9-vertex triangulation has planar complement");
    if (!validate_witness(complement, *result.subdivision))
      throw std::logic_error("verify_theorem1: stored witness fails re-validation");
    report.entries.push_back(Theorem1Entry{member, std::move(*result.subdivision)});
  }
  report.all_nonplanar = true;
  return report;
}

BiplanarPair find_biplanar_k8() {
  for (const Graph& member : enumerate_triangulations(8).members) {
    Graph complement = member.complement();
    auto complement_result = is_planar(complement);
    if (!complement_result.planar) continue;
    BiplanarPair pair{embed_triangulation(member), std::move(*complement_result.embedding)};
    if (auto violation = check_pair(pair, Graph::complete(8)))
      throw std::logic_error("find_biplanar_k8: witness fails validation: " + violation->invariant);
    return pair;
  }
  throw std::logic_error("find_biplanar_k8: no member of the 8-vertex catalog has a planar complement");
}

}  // namespace bpv
