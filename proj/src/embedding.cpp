#include "bpv/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bpv {

namespace {

int position_of(const std::vector<int>& rotation, int v) {
  for (int i = 0; i < static_cast<int>(rotation.size()); ++i)
    if (rotation[i] == v) return i;
  throw std::logic_error("rotation: neighbor not found");
}

// Directed-edge walks under next(u->v) = (v -> successor of u at v).
// Deterministic: walks start from the smallest unvisited directed edge.
std::vector<std::vector<int>> trace_walks(const Graph& g, const std::vector<std::vector<int>>& rotation) {
  std::vector<std::vector<int>> walks;
  std::vector<std::vector<char>> visited(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) visited[v].assign(rotation[v].size(), 0);

  for (int start = 0; start < g.vertex_count(); ++start) {
    for (int idx = 0; idx < static_cast<int>(rotation[start].size()); ++idx) {
      if (visited[start][idx]) continue;
      std::vector<int> walk;
      int u = start;
      int i = idx;
      do {
        visited[u][i] = 1;
        walk.push_back(u);
        int v = rotation[u][i];
        int pos_u = position_of(rotation[v], u);
        int next = (pos_u + 1) % static_cast<int>(rotation[v].size());
        u = v;
        i = next;
      } while (!(u == start && i == idx));
      walks.push_back(std::move(walk));
    }
  }
  return walks;
}

void insert_after(std::vector<int>& rotation, int after, int added) {
  int pos = position_of(rotation, after);
  rotation.insert(rotation.begin() + pos + 1, added);
}

}  // namespace

Face Face::from_walk(std::vector<int> walk) {
  Face f;
  if (walk.empty()) return f;
  int len = static_cast<int>(walk.size());
  std::vector<int> best = walk;
  std::vector<int> candidate(len);
  for (int s = 1; s < len; ++s) {
    for (int t = 0; t < len; ++t) candidate[t] = walk[(s + t) % len];
    if (candidate < best) best = candidate;
  }
  f.boundary = std::move(best);
  return f;
}

VertexSet Face::vertex_set() const {
  VertexSet s;
  for (int v : boundary) s.add(v);
  return s;
}

bool Face::is_simple_cycle() const {
  return length() >= 3 && vertex_set().size() == length();
}

RotationSystem::RotationSystem(Graph g, std::vector<std::vector<int>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  if (static_cast<int>(rotation_.size()) != graph_.vertex_count())
    throw std::invalid_argument("rotation system: wrong number of rotations");
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    VertexSet listed;
    for (int u : rotation_[v]) {
      if (u < 0 || u >= graph_.vertex_count() || listed.contains(u))
        throw std::invalid_argument("rotation system: rotation is not a permutation of the neighbors");
      listed.add(u);
    }
    if (listed != graph_.neighbors(v))
      throw std::invalid_argument("rotation system: rotation is not a permutation of the neighbors");
  }
  auto fs = faces();
  if (!fs.empty()) outer_ = fs.front();
}

void RotationSystem::set_outer_face(const Face& f) {
  if (!has_face(f)) throw std::invalid_argument("set_outer_face: not a face of this embedding");
  outer_ = f;
}

std::vector<Face> RotationSystem::faces() const {
  std::vector<Face> out;
  for (auto& walk : trace_walks(graph_, rotation_)) out.push_back(Face::from_walk(std::move(walk)));
  std::sort(out.begin(), out.end());
  return out;
}

bool RotationSystem::has_face(const Face& f) const {
  if (f.boundary.empty()) return graph_.edge_count() == 0;
  auto fs = faces();
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

bool RotationSystem::euler_ok() const {
  auto walks = trace_walks(graph_, rotation_);
  for (VertexSet component : graph_.components()) {
    int vertices = component.size();
    int edges = 0;
    for (int v : component) edges += graph_.degree(v);
    edges /= 2;
    if (edges == 0) continue;
    int faces_owned = 0;
    for (const auto& walk : walks)
      if (component.contains(walk.front())) ++faces_owned;
    if (vertices - edges + faces_owned != 2) return false;
  }
  return true;
}

EdgeInsertion insert_edge_in_face(const RotationSystem& e, int u, int v, const Face& f) {
  if (u == v) throw std::invalid_argument("insert_edge_in_face: endpoints equal");
  if (e.graph().has_edge(u, v)) throw std::invalid_argument("insert_edge_in_face: edge already present");
  if (!e.has_face(f)) throw std::invalid_argument("insert_edge_in_face: unknown face");
  const auto& walk = f.boundary;
  int len = f.length();
  int i = -1, j = -1;
  for (int t = 0; t < len; ++t) {
    if (i < 0 && walk[t] == u) i = t;
    if (j < 0 && walk[t] == v) j = t;
  }
  if (i < 0 || j < 0) throw std::invalid_argument("insert_edge_in_face: endpoint not on face");

  Graph g = e.graph();
  g.add_edge(u, v);
  auto rotation = e.rotations();
  insert_after(rotation[u], walk[(i + len - 1) % len], v);
  insert_after(rotation[v], walk[(j + len - 1) % len], u);

  std::vector<int> walk_from_v{u};
  for (int t = j; t != i; t = (t + 1) % len) walk_from_v.push_back(walk[t]);
  std::vector<int> walk_from_u{v};
  for (int t = i; t != j; t = (t + 1) % len) walk_from_u.push_back(walk[t]);

  EdgeInsertion result{RotationSystem(g, std::move(rotation)), Face::from_walk(std::move(walk_from_v)),
                       Face::from_walk(std::move(walk_from_u))};
  result.embedding.set_outer_face(f == e.outer_face() ? result.with_section_from_v : e.outer_face());
  return result;
}

RotationSystem connect_in_faces(const RotationSystem& e, int u, const Face& fu, int v, const Face& fv) {
  if (e.graph().component_of(u).contains(v))
    throw std::invalid_argument("connect_in_faces: endpoints share a component");
  for (auto [w, fw] : {std::pair<int, const Face*>{u, &fu}, {v, &fv}}) {
    if (fw->boundary.empty()) {
      if (e.graph().degree(w) != 0) throw std::invalid_argument("connect_in_faces: empty face for non-isolated vertex");
    } else if (!e.has_face(*fw) || !fw->contains(w)) {
      throw std::invalid_argument("connect_in_faces: vertex not on the given face");
    }
  }

  Graph g = e.graph();
  g.add_edge(u, v);
  auto rotation = e.rotations();
  for (auto [w, o, fw] : {std::tuple<int, int, const Face*>{u, v, &fu}, {v, u, &fv}}) {
    if (fw->boundary.empty()) {
      rotation[w].push_back(o);
    } else {
      const auto& walk = fw->boundary;
      int len = fw->length();
      int i = position_of(walk, w);
      insert_after(rotation[w], walk[(i + len - 1) % len], o);
    }
  }

  RotationSystem merged(std::move(g), std::move(rotation));
  if (e.outer_face() == fu || e.outer_face() == fv) {
    for (const Face& f : merged.faces()) {
      if (f.contains(u) && f.contains(v)) {
        merged.set_outer_face(f);
        break;
      }
    }
  } else if (!e.outer_face().boundary.empty()) {
    merged.set_outer_face(e.outer_face());
  }
  return merged;
}

RotationSystem remove_edge_embedded(const RotationSystem& e, int u, int v) {
  if (!e.graph().has_edge(u, v)) throw std::invalid_argument("remove_edge_embedded: no such edge");
  Graph g = e.graph();
  g.remove_edge(u, v);
  auto rotation = e.rotations();
  rotation[u].erase(rotation[u].begin() + position_of(rotation[u], v));
  rotation[v].erase(rotation[v].begin() + position_of(rotation[v], u));
  RotationSystem out(std::move(g), std::move(rotation));

  const Face& old_outer = e.outer_face();
  if (out.has_face(old_outer)) {
    out.set_outer_face(old_outer);
    return out;
  }
  // The outer face was incident to uv; re-point it at a surviving walk that
  // shares a directed arc with the old boundary.
  std::vector<std::pair<int, int>> old_arcs;
  int len = old_outer.length();
  for (int t = 0; t < len; ++t) {
    int a = old_outer.boundary[t];
    int b = old_outer.boundary[(t + 1) % len];
    if (make_edge(a, b) != make_edge(u, v)) old_arcs.emplace_back(a, b);
  }
  for (const Face& f : out.faces()) {
    int flen = f.length();
    for (int t = 0; t < flen; ++t) {
      std::pair<int, int> arc{f.boundary[t], f.boundary[(t + 1) % flen]};
      if (std::find(old_arcs.begin(), old_arcs.end(), arc) != old_arcs.end()) return out.set_outer_face(f), out;
    }
  }
  return out;  // constructor default (canonical smallest face, or empty)
}

RotationSystem stellate_face(const RotationSystem& e, const Face& f) {
  if (!e.has_face(f)) throw std::invalid_argument("stellate_face: unknown face");
  if (!f.is_simple_cycle()) throw std::invalid_argument("stellate_face: face is not a simple cycle");
  int n = e.vertex_count();
  if (n + 1 > Graph::kMaxVertices) throw std::invalid_argument("stellate_face: vertex limit reached");
  int z = n;
  Graph g(n + 1);
  for (auto [u, v] : e.graph().edges()) g.add_edge(u, v);
  std::vector<std::vector<int>> rotation = e.rotations();
  rotation.emplace_back();

  const auto& walk = f.boundary;
  int len = f.length();
  // Reversed walk order at z makes each corner close into the triangle
  // (z, walk[t], walk[t+1]) under the trace rule.
  for (int t = len - 1; t >= 0; --t) rotation[z].push_back(walk[t]);
  for (int t = 0; t < len; ++t) {
    g.add_edge(z, walk[t]);
    insert_after(rotation[walk[t]], walk[(t + len - 1) % len], z);
  }

  RotationSystem out(std::move(g), std::move(rotation));
  if (f != e.outer_face() && !e.outer_face().boundary.empty()) out.set_outer_face(e.outer_face());
  return out;
}

RotationSystem isolate_vertices(const RotationSystem& e, VertexSet zap) {
  Graph g = e.graph();
  auto rotation = e.rotations();
  for (int z : zap) {
    for (int u : g.neighbors(z).to_vector()) {
      g.remove_edge(z, u);
      rotation[u].erase(rotation[u].begin() + position_of(rotation[u], z));
    }
    rotation[z].clear();
  }
  RotationSystem out(std::move(g), std::move(rotation));
  if (out.has_face(e.outer_face())) out.set_outer_face(e.outer_face());
  return out;
}

std::pair<RotationSystem, Face> delete_vertex(const RotationSystem& e, int r) {
  if (r < 0 || r >= e.vertex_count()) throw std::invalid_argument("delete_vertex: no such vertex");
  auto old_faces = e.faces();
  RotationSystem dropped = isolate_vertices(e, VertexSet{r});

  // Multiset difference: the walks created by the removal are those of the
  // new embedding not accounted for by old faces that avoided r.
  std::map<Face, int> leftover;
  for (const Face& f : dropped.faces()) ++leftover[f];
  for (const Face& f : old_faces)
    if (!f.contains(r)) --leftover[f];
  Face merged;  // stays empty when r was isolated or the graph is now edgeless
  for (auto& [f, count] : leftover) {
    if (count > 0) {
      merged = f;
      break;
    }
  }

  // Relabel densely: labels above r shift down by one.
  auto relabel = [r](int v) { return v > r ? v - 1 : v; };
  Graph g = e.graph().without_vertex(r);
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int v = 0; v < e.vertex_count(); ++v) {
    if (v == r) continue;
    for (int u : dropped.rotation(v)) rotation[relabel(v)].push_back(relabel(u));
  }
  RotationSystem out(std::move(g), std::move(rotation));

  auto relabel_face = [&](const Face& f) {
    std::vector<int> walk;
    walk.reserve(f.boundary.size());
    for (int v : f.boundary) walk.push_back(relabel(v));
    return Face::from_walk(std::move(walk));
  };
  Face merged_out = merged.boundary.empty() ? (e.outer_face().contains(r) ? Face{} : relabel_face(e.outer_face()))
                                            : relabel_face(merged);
  if (merged.boundary.empty() && e.outer_face().contains(r)) merged_out = out.outer_face();

  if (e.outer_face().contains(r)) {
    if (!merged_out.boundary.empty()) out.set_outer_face(merged_out);
  } else if (!e.outer_face().boundary.empty()) {
    out.set_outer_face(relabel_face(e.outer_face()));
  }
  return {std::move(out), merged_out};
}

bool is_triangulation(const RotationSystem& e) {
  if (e.vertex_count() < 3 || !e.graph().is_connected()) return false;
  for (const Face& f : e.faces())
    if (f.length() != 3) return false;
  return e.graph().edge_count() > 0;
}

VertexSet vertices_on_face(const RotationSystem& e, const Face& f) {
  if (!e.has_face(f)) throw std::invalid_argument("vertices_on_face: unknown face");
  return f.vertex_set();
}

}  // namespace bpv
