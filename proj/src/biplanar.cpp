#include "bpv/biplanar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bpv/enumeration.hpp"
#include "bpv/planarity.hpp"

namespace bpv {

namespace {

struct Move {
  int u, v;
  Face face;
};

// First transferable pair in canonical order: faces sorted, then boundary
// vertices by index.
std::optional<Move> find_in_face_move(const RotationSystem& h, const std::vector<Edge>& frozen,
                                      bool internal_only) {
  for (const Face& f : h.faces()) {
    if (internal_only && f == h.outer_face()) continue;
    auto vs = f.vertex_set().to_vector();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        Edge e = make_edge(vs[i], vs[j]);
        if (h.graph().has_edge(e.first, e.second)) continue;
        if (std::find(frozen.begin(), frozen.end(), e) != frozen.end()) continue;
        return Move{e.first, e.second, f};
      }
    }
  }
  return std::nullopt;
}

Face smallest_face_at(const RotationSystem& h, int v) {
  if (h.graph().degree(v) == 0) return Face{};
  for (const Face& f : h.faces())
    if (f.contains(v)) return f;
  throw std::logic_error("vertex with edges lies on no face");
}

void check_frozen_absent(const Graph& g, const std::vector<Edge>& frozen) {
  for (auto [u, v] : frozen)
    if (g.has_edge(u, v)) throw std::invalid_argument("restricted_augment: frozen pair is already an edge");
}

RotationSystem embed_planar(const Graph& g) {
  auto result = is_planar(g);
  if (!result.planar) throw std::logic_error("embed_planar: graph is nonplanar");
  return std::move(*result.embedding);
}

}  // namespace

std::optional<PairViolation> check_pair(const BiplanarPair& p, const Graph& target) {
  int n = target.vertex_count();
  if (p.first.vertex_count() != n || p.second.vertex_count() != n)
    return PairViolation{"shape", "vertex counts disagree with the target graph"};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool in1 = p.first.graph().has_edge(u, v);
      bool in2 = p.second.graph().has_edge(u, v);
      if (in1 && in2)
        return PairViolation{"partition", "edge on both sides: " + std::to_string(u) + "-" + std::to_string(v)};
      if ((in1 || in2) != target.has_edge(u, v))
        return PairViolation{"partition", "edge union differs from the target at " + std::to_string(u) + "-" +
                                              std::to_string(v)};
    }
  }
  if (n >= 3) {
    if (p.first.graph().edge_count() > euler_edge_bound(n))
      return PairViolation{"euler-bound", "first side exceeds 3n-6 edges"};
    if (p.second.graph().edge_count() > euler_edge_bound(n))
      return PairViolation{"euler-bound", "second side exceeds 3n-6 edges"};
  }
  if (!p.first.euler_ok()) return PairViolation{"planarity", "first embedding fails the Euler face count"};
  if (!p.second.euler_ok()) return PairViolation{"planarity", "second embedding fails the Euler face count"};
  return std::nullopt;
}

BiplanarPair augment_to_maximal(BiplanarPair p) {
  if (p.n() < 3) throw std::invalid_argument("augment_to_maximal: need n >= 3");
  if (auto violation = check_pair(p, Graph::complete(p.n())))
    throw std::invalid_argument("augment_to_maximal: invalid pair: " + violation->invariant);

  while (!is_triangulation(p.first)) {
    if (auto move = find_in_face_move(p.first, {}, false)) {
      p.second = remove_edge_embedded(p.second, move->u, move->v);
      p.first = insert_edge_in_face(p.first, move->u, move->v, move->face).embedding;
      continue;
    }
    if (!p.first.graph().is_connected()) {
      int u = 0;
      VertexSet reach = p.first.graph().component_of(u);
      int v = VertexSet::full(p.n()).minus(reach).smallest();
      p.second = remove_edge_embedded(p.second, u, v);
      p.first = connect_in_faces(p.first, u, smallest_face_at(p.first, u), v, smallest_face_at(p.first, v));
      continue;
    }
    throw std::logic_error("augment_to_maximal: stalled before reaching a triangulation");
  }
  return p;
}

std::pair<RotationSystem, std::vector<Edge>> restricted_augment_embedding(RotationSystem h,
                                                                          const std::vector<Edge>& frozen) {
  check_frozen_absent(h.graph(), frozen);
  std::vector<Edge> added;
  while (auto move = find_in_face_move(h, frozen, /*internal_only=*/true)) {
    h = insert_edge_in_face(h, move->u, move->v, move->face).embedding;
    added.push_back(make_edge(move->u, move->v));
  }
  return {std::move(h), std::move(added)};
}

BiplanarPair restricted_augment(BiplanarPair p, const std::vector<Edge>& frozen) {
  if (auto violation = check_pair(p, Graph::complete(p.n())))
    throw std::invalid_argument("restricted_augment: invalid pair: " + violation->invariant);
  auto [maximal, added] = restricted_augment_embedding(std::move(p.first), frozen);
  p.first = std::move(maximal);
  for (auto [u, v] : added) p.second = remove_edge_embedded(p.second, u, v);
  return p;
}

ThicknessResult thickness_at_most_2(const Graph& g) {
  int n = g.vertex_count();
  if (n > 9) throw std::invalid_argument("thickness_at_most_2: supported range is n <= 9");

  if (planar_decision(g)) {
    BiplanarPair witness{embed_planar(g), RotationSystem(Graph(n), std::vector<std::vector<int>>(n))};
    return ThicknessResult{true, std::move(witness), "graph is planar; the second page is empty"};
  }

  if (g == Graph::complete(n)) {
    // K_n is biplanar iff some maximal planar graph on n vertices has a
    // planar complement: augmentation makes the first page maximal without
    // leaving the plane, so scanning the catalog is exhaustive.
    const auto& catalog = enumerate_triangulations(n);
    for (const Graph& member : catalog.members) {
      Graph complement = member.complement();
      if (!planar_decision(complement)) continue;
      BiplanarPair witness{embed_planar(member), embed_planar(complement)};
      return ThicknessResult{true, std::move(witness),
                             "catalog member " + to_graph6(member) + " has a planar complement"};
    }
    return ThicknessResult{false, std::nullopt,
                           "exhaustive: all " + std::to_string(catalog.members.size()) + " maximal planar graphs on " +
                               std::to_string(n) + " vertices have nonplanar complements"};
  }

  // Backtracking bipartition, lexicographic-first. The first edge is pinned
  // to side one, which breaks the page swap symmetry.
  std::vector<Edge> edges = g.edges();
  Graph side1(n), side2(n);
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == edges.size()) return true;
    auto [u, v] = edges[k];
    for (Graph* side : {&side1, &side2}) {
      if (k == 0 && side == &side2) continue;
      side->add_edge(u, v);
      if ((n < 3 || side->edge_count() <= euler_edge_bound(n)) && planar_decision(*side)) {
        if (assign(k + 1)) return true;
      }
      side->remove_edge(u, v);
    }
    return false;
  };
  if (assign(0)) {
    BiplanarPair witness{embed_planar(side1), embed_planar(side2)};
    return ThicknessResult{true, std::move(witness), "bipartition found by backtracking search"};
  }
  return ThicknessResult{false, std::nullopt, "exhaustive: no edge bipartition keeps both pages planar"};
}

CrossingResult crossing_le_1(const Graph& g) {
  int n = g.vertex_count();
  if (n > 14) throw std::invalid_argument("crossing_le_1: supported range is n <= 14");
  if (planar_decision(g)) return CrossingResult{true, std::nullopt};

  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      // Replace the two edges by a degree-4 crossing vertex.
      Graph planarized(n + 1);
      for (auto [u, v] : edges)
        if (edges[i] != make_edge(u, v) && edges[j] != make_edge(u, v)) planarized.add_edge(u, v);
      for (int end : {a, b, c, d}) planarized.add_edge(n, end);
      if (planar_decision(planarized)) return CrossingResult{true, std::pair{edges[i], edges[j]}};
    }
  }
  return CrossingResult{false, std::nullopt};
}

BiplanarCrossingWitness biplanar_crossing_k9() {
  std::optional<BiplanarCrossingWitness> found;
  for (const Graph& member : enumerate_triangulations(9).members) {
    Graph complement = member.complement();
    if (planar_decision(complement))
      throw std::logic_error("biplanar_crossing_k9: planar complement would mean a crossing-free K9");
    if (!found) {
      CrossingResult r = crossing_le_1(complement);
      if (r.at_most_one) found = BiplanarCrossingWitness{1, member, *r.crossing_pair};
    }
  }
  if (!found) throw std::logic_error("biplanar_crossing_k9: no triangulation has a one-crossing complement");
  return *found;
}

ClaimedPair as_claim(const BiplanarPair& p) {
  return ClaimedPair{ClaimedEmbedding{p.first.graph(), p.first.rotations()},
                     ClaimedEmbedding{p.second.graph(), p.second.rotations()}};
}

PairViolation refute_k9_certificate(const ClaimedPair& p) {
  if (p.first.graph.vertex_count() != 9 || p.second.graph.vertex_count() != 9)
    return PairViolation{"shape", "both sides must have nine vertices"};
  for (int u = 0; u < 9; ++u) {
    for (int v = u + 1; v < 9; ++v) {
      bool in1 = p.first.graph.has_edge(u, v);
      bool in2 = p.second.graph.has_edge(u, v);
      if (in1 && in2)
        return PairViolation{"partition", "edge on both sides: " + std::to_string(u) + "-" + std::to_string(v)};
      if (!in1 && !in2)
        return PairViolation{"partition", "edge missing from the union: " + std::to_string(u) + "-" +
                                              std::to_string(v)};
    }
  }
  for (auto [side, name] : {std::pair<const ClaimedEmbedding*, const char*>{&p.first, "first"},
                            {&p.second, "second"}}) {
    if (side->graph.edge_count() > euler_edge_bound(9))
      return PairViolation{"euler-bound",
                           std::string(name) + " side has " + std::to_string(side->graph.edge_count()) +
                               " edges, above the planar maximum of 21"};
  }
  for (auto [side, name] : {std::pair<const ClaimedEmbedding*, const char*>{&p.first, "first"},
                            {&p.second, "second"}}) {
    RotationSystem embedding;
    try {
      embedding = RotationSystem(side->graph, side->rotation);
    } catch (const std::invalid_argument& error) {
      return PairViolation{"embedding", std::string(name) + " side: " + error.what()};
    }
    if (!embedding.euler_ok())
      return PairViolation{"planarity", std::string(name) + " embedding fails the Euler face count"};
  }
  throw std::logic_error("refute_k9_certificate: claim passed every invariant; this contradicts the "
                         "non-biplanarity of K9");
}

}  // namespace bpv
