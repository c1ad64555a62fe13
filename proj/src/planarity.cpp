#include "bpv/planarity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bpv {

namespace {

// ---------------------------------------------------------------------
// Biconnected components (lowpoint algorithm with an edge stack).

struct BlockFinder {
  const Graph& g;
  std::array<int, Graph::kMaxVertices> num{};
  std::array<int, Graph::kMaxVertices> low{};
  int counter = 0;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;

  explicit BlockFinder(const Graph& graph) : g(graph) {}

  void dfs(int u, int parent) {
    num[u] = low[u] = ++counter;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (num[v] == 0) {
        stack.push_back(make_edge(u, v));
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) {
          std::vector<Edge> block;
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            block.push_back(top);
          } while (top != make_edge(u, v));
          blocks.push_back(std::move(block));
        }
      } else if (num[v] < num[u]) {
        stack.push_back(make_edge(u, v));
        low[u] = std::min(low[u], num[v]);
      }
    }
  }

  std::vector<std::vector<Edge>> run() {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (num[v] == 0 && g.degree(v) > 0) dfs(v, -1);
    return std::move(blocks);
  }
};

// ---------------------------------------------------------------------
// Path-addition planarity per biconnected block. Start from a cycle, then
// repeatedly route a path of some unembedded fragment through a face whose
// boundary covers the fragment's attachments, preferring fragments with a
// unique admissible face. A fragment with no admissible face means the
// block is nonplanar. Face boundaries stay simple cycles throughout, so
// walk positions are unambiguous.

struct BlockEmbedder {
  const Graph& block;
  VertexSet block_vertices;
  Graph embedded;
  std::vector<std::vector<int>>& rotation;  // shared output, full label space
  std::vector<std::vector<int>> walks;
  VertexSet placed;

  BlockEmbedder(const Graph& b, VertexSet vs, std::vector<std::vector<int>>& rot)
      : block(b), block_vertices(vs), embedded(b.vertex_count()), rotation(rot) {}

  bool run() {
    embed_start_cycle();
    while (embedded.edge_count() < block.edge_count()) {
      if (!embed_one_fragment()) return false;
    }
    return true;
  }

  void embed_start_cycle() {
    std::vector<int> cycle = find_cycle();
    int len = static_cast<int>(cycle.size());
    for (int t = 0; t < len; ++t) {
      int v = cycle[t];
      rotation[v] = {cycle[(t + len - 1) % len], cycle[(t + 1) % len]};
      embedded.add_edge(v, cycle[(t + 1) % len]);
      placed.add(v);
    }
    std::vector<int> reversed(cycle.rbegin(), cycle.rend());
    walks.push_back(std::move(cycle));
    walks.push_back(std::move(reversed));
  }

  std::vector<int> find_cycle() {
    std::array<int, Graph::kMaxVertices> parent;
    parent.fill(-2);
    int root = block_vertices.smallest();
    parent[root] = -1;
    std::vector<int> order{root};
    for (std::size_t head = 0; head < order.size(); ++head) {
      int u = order[head];
      for (int v : block.neighbors(u)) {
        if (v == parent[u]) continue;
        if (parent[v] != -2) {
          // Back/cross edge in the BFS forest: close a cycle through the
          // two tree paths to the nearest common ancestor.
          std::vector<int> up_u, up_v;
          for (int x = u; x != -1; x = parent[x]) up_u.push_back(x);
          for (int x = v; x != -1; x = parent[x]) up_v.push_back(x);
          while (up_u.size() >= 2 && up_v.size() >= 2 && up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
            up_u.pop_back();
            up_v.pop_back();
          }
          std::vector<int> cycle(up_u.begin(), up_u.end());
          cycle.pop_back();  // shared ancestor, kept from up_v
          for (auto it = up_v.rbegin(); it != up_v.rend(); ++it) cycle.push_back(*it);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        parent[v] = u;
        order.push_back(v);
      }
    }
    throw std::logic_error("block has no cycle");
  }

  struct Fragment {
    VertexSet interior;     // empty for a chord
    Edge chord{-1, -1};
    VertexSet attachments;
  };

  bool embed_one_fragment() {
    std::vector<Fragment> fragments;
    // Components of the block minus placed vertices.
    VertexSet waiting = block_vertices.minus(placed);
    VertexSet seen;
    for (int s : waiting) {
      if (seen.contains(s)) continue;
      VertexSet comp{s};
      for (;;) {
        VertexSet grown = comp;
        for (int u : comp) grown = grown | (block.neighbors(u) & waiting);
        if (grown == comp) break;
        comp = grown;
      }
      seen = seen | comp;
      VertexSet attach;
      for (int u : comp) attach = attach | (block.neighbors(u) & placed);
      fragments.push_back(Fragment{comp, Edge{-1, -1}, attach});
    }
    // Chords between placed vertices.
    for (int u : placed)
      for (int v : block.neighbors(u) & placed)
        if (u < v && !embedded.has_edge(u, v)) fragments.push_back(Fragment{{}, Edge{u, v}, VertexSet{u, v}});

    std::vector<int> walk_masks(walks.size());
    for (std::size_t w = 0; w < walks.size(); ++w) {
      VertexSet vs;
      for (int v : walks[w]) vs.add(v);
      walk_masks[w] = vs.bits();
    }

    int pick_fragment = -1, pick_face = -1;
    for (std::size_t f = 0; f < fragments.size(); ++f) {
      int admissible = 0, first_face = -1;
      for (std::size_t w = 0; w < walks.size(); ++w) {
        if ((fragments[f].attachments.bits() & ~walk_masks[w]) == 0) {
          ++admissible;
          if (first_face < 0) first_face = static_cast<int>(w);
        }
      }
      if (admissible == 0) return false;
      if (pick_fragment < 0) {
        pick_fragment = static_cast<int>(f);
        pick_face = first_face;
      }
      if (admissible == 1) {
        pick_fragment = static_cast<int>(f);
        pick_face = first_face;
        break;
      }
    }
    if (pick_fragment < 0) throw std::logic_error("no fragment despite missing edges");

    embed_path(fragment_path(fragments[pick_fragment]), pick_face);
    return true;
  }

  std::vector<int> fragment_path(const Fragment& frag) {
    if (frag.interior.empty()) return {frag.chord.first, frag.chord.second};
    auto attach = frag.attachments.to_vector();
    int a = attach[0], b = attach[1];
    // BFS from a through the fragment interior until a neighbor of b.
    std::array<int, Graph::kMaxVertices> parent;
    parent.fill(-2);
    std::vector<int> queue;
    for (int x : block.neighbors(a) & frag.interior) {
      parent[x] = -1;
      queue.push_back(x);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (block.has_edge(u, b)) {
        std::vector<int> path{b};
        for (int x = u; x != -1; x = parent[x]) path.push_back(x);
        path.push_back(a);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (int x : block.neighbors(u) & frag.interior)
        if (parent[x] == -2) {
          parent[x] = u;
          queue.push_back(x);
        }
    }
    throw std::logic_error("fragment path not found");
  }

  void embed_path(const std::vector<int>& path, int face_index) {
    std::vector<int> walk = std::move(walks[face_index]);
    int len = static_cast<int>(walk.size());
    int a = path.front(), b = path.back();
    int i = static_cast<int>(std::find(walk.begin(), walk.end(), a) - walk.begin());
    int j = static_cast<int>(std::find(walk.begin(), walk.end(), b) - walk.begin());

    auto insert_after_neighbor = [&](int at, int after, int added) {
      auto& rot = rotation[at];
      auto pos = std::find(rot.begin(), rot.end(), after);
      rot.insert(pos + 1, added);
    };
    insert_after_neighbor(a, walk[(i + len - 1) % len], path[1]);
    insert_after_neighbor(b, walk[(j + len - 1) % len], path[path.size() - 2]);
    for (std::size_t t = 1; t + 1 < path.size(); ++t) {
      rotation[path[t]] = {path[t - 1], path[t + 1]};
      placed.add(path[t]);
    }
    for (std::size_t t = 0; t + 1 < path.size(); ++t) embedded.add_edge(path[t], path[t + 1]);

    std::vector<int> face1(path.begin(), path.end() - 1);  // a .. pm, then walk section from b to a
    for (int t = j; t != i; t = (t + 1) % len) face1.push_back(walk[t]);
    std::vector<int> face2(path.rbegin(), path.rend() - 1);  // b .. p1, then walk section from a to b
    for (int t = i; t != j; t = (t + 1) % len) face2.push_back(walk[t]);
    walks[face_index] = std::move(face1);
    walks.push_back(std::move(face2));
  }
};

bool component_planar(const Graph& g, VertexSet component, std::vector<std::vector<int>>* rotation) {
  if (component.size() <= 1) return true;
  int vertices = component.size();
  int edges = 0;
  for (int v : component) edges += g.degree(v);
  edges /= 2;
  if (vertices >= 3 && edges > euler_edge_bound(vertices)) return false;

  Graph sub(g.vertex_count());
  for (int u : component)
    for (int v : g.neighbors(u))
      if (u < v) sub.add_edge(u, v);

  std::vector<std::vector<int>> scratch;
  std::vector<std::vector<int>>* rot = rotation;
  if (!rot) {
    scratch.assign(g.vertex_count(), {});
    rot = &scratch;
  }
  for (auto& block_edges : BlockFinder(sub).run()) {
    if (block_edges.size() == 1) {
      auto [u, v] = block_edges.front();
      rot->at(u).push_back(v);
      rot->at(v).push_back(u);
      continue;
    }
    Graph bg(g.vertex_count());
    VertexSet bv;
    for (auto [u, v] : block_edges) {
      bg.add_edge(u, v);
      bv.add(u);
      bv.add(v);
    }
    if (static_cast<int>(block_edges.size()) > euler_edge_bound(bv.size())) return false;
    std::vector<std::vector<int>> block_rotation(g.vertex_count());
    BlockEmbedder embedder(bg, bv, block_rotation);
    if (!embedder.run()) return false;
    // Concatenating each block's cyclic order at a shared cut vertex keeps
    // every block inside one corner of the others, so genus stays zero.
    for (int v : bv) rot->at(v).insert(rot->at(v).end(), block_rotation[v].begin(), block_rotation[v].end());
  }
  return true;
}

bool decide_or_embed(const Graph& g, std::vector<std::vector<int>>* rotation) {
  int n = g.vertex_count();
  if (n >= 3 && g.edge_count() > euler_edge_bound(n)) return false;
  for (VertexSet component : g.components())
    if (!component_planar(g, component, rotation)) return false;
  return true;
}

// ---------------------------------------------------------------------
// Negative witness: strip edges while nonplanarity persists. The residue
// is an edge-minimal nonplanar graph, which is exactly a K5 or K3,3
// subdivision; read its structure off the degrees.

SubdivisionWitness recognize_subdivision(const Graph& w) {
  std::vector<int> branches;
  for (int v = 0; v < w.vertex_count(); ++v) {
    int d = w.degree(v);
    if (d >= 3) branches.push_back(v);
  }

  SubdivisionWitness out;
  VertexSet branch_set;
  for (int b : branches) branch_set.add(b);

  auto follow = [&](int from, int first) {
    std::vector<int> path{from, first};
    int prev = from, cur = first;
    while (!branch_set.contains(cur)) {
      VertexSet nb = w.neighbors(cur);
      nb.remove(prev);
      if (nb.size() != 1) throw std::logic_error("witness residue is not a subdivision");
      prev = cur;
      cur = nb.smallest();
      path.push_back(cur);
    }
    return path;
  };

  std::vector<std::vector<int>> found;
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Edge> used;
  for (int b : branches) {
    for (int x : w.neighbors(b)) {
      if (std::find(used.begin(), used.end(), make_edge(b, x)) != used.end()) continue;
      auto path = follow(b, x);
      for (std::size_t t = 0; t + 1 < path.size(); ++t) used.push_back(make_edge(path[t], path[t + 1]));
      found.push_back(path);
      endpoints.emplace_back(path.front(), path.back());
    }
  }

  if (branches.size() == 5) {
    out.kind = SubdivisionKind::K5;
    out.branch_vertices = branches;
  } else if (branches.size() == 6) {
    out.kind = SubdivisionKind::K33;
    // Side of b0 = branches not path-connected to b0.
    std::vector<int> side_a{branches[0]}, side_b;
    for (std::size_t t = 1; t < branches.size(); ++t) {
      bool linked = false;
      for (auto [a, b] : endpoints)
        if ((a == branches[0] && b == branches[t]) || (b == branches[0] && a == branches[t])) linked = true;
      (linked ? side_b : side_a).push_back(branches[t]);
    }
    if (side_a.size() != 3 || side_b.size() != 3) throw std::logic_error("witness residue is not a K33 pattern");
    out.branch_vertices = side_a;
    out.branch_vertices.insert(out.branch_vertices.end(), side_b.begin(), side_b.end());
  } else {
    throw std::logic_error("witness residue has unexpected branch count");
  }

  // Order paths by required pattern pair.
  std::vector<std::pair<int, int>> required;
  if (out.kind == SubdivisionKind::K5) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) required.emplace_back(out.branch_vertices[i], out.branch_vertices[j]);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) required.emplace_back(out.branch_vertices[i], out.branch_vertices[j]);
  }
  for (auto [a, b] : required) {
    bool got = false;
    for (std::size_t t = 0; t < found.size(); ++t) {
      if ((endpoints[t] == std::pair{a, b}) || (endpoints[t] == std::pair{b, a})) {
        auto path = found[t];
        if (path.front() != a) std::reverse(path.begin(), path.end());
        out.paths.push_back(std::move(path));
        found.erase(found.begin() + t);
        endpoints.erase(endpoints.begin() + t);
        got = true;
        break;
      }
    }
    if (!got) throw std::logic_error("witness residue is missing a pattern path");
  }
  if (!found.empty()) throw std::logic_error("witness residue has extra paths");
  return out;
}

SubdivisionWitness extract_witness(Graph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : g.edges()) {
      Graph trial = g;
      trial.remove_edge(u, v);
      if (!planar_decision(trial)) {
        g = trial;
        changed = true;
      }
    }
  }
  return recognize_subdivision(g);
}

// ---------------------------------------------------------------------
// Brute-force subdivision search.

struct PatternSearch {
  const Graph& g;
  std::vector<int> branches;
  std::vector<std::pair<int, int>> pairs;
  VertexSet branch_set;
  VertexSet used;
  std::vector<std::vector<int>> paths;

  bool solve(std::size_t k) {
    if (k == pairs.size()) return true;
    paths[k] = {pairs[k].first};
    return extend(k, pairs[k].first, pairs[k].second);
  }

  bool extend(std::size_t k, int cur, int target) {
    if (g.has_edge(cur, target)) {
      paths[k].push_back(target);
      if (solve(k + 1)) return true;
      paths[k].pop_back();
    }
    for (int x : g.neighbors(cur)) {
      if (x == target || branch_set.contains(x) || used.contains(x)) continue;
      used.add(x);
      paths[k].push_back(x);
      if (extend(k, x, target)) return true;
      paths[k].pop_back();
      used.remove(x);
    }
    return false;
  }
};

std::optional<SubdivisionWitness> try_pattern(const Graph& g, SubdivisionKind kind, std::vector<int> branches) {
  PatternSearch search{g, std::move(branches), {}, {}, {}, {}};
  if (kind == SubdivisionKind::K5) {
    for (int i = 0; i < 5; ++i) {
      if (g.degree(search.branches[i]) < 4) return std::nullopt;
      for (int j = i + 1; j < 5; ++j) search.pairs.emplace_back(search.branches[i], search.branches[j]);
    }
  } else {
    for (int i = 0; i < 6; ++i)
      if (g.degree(search.branches[i]) < 3) return std::nullopt;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) search.pairs.emplace_back(search.branches[i], search.branches[j]);
  }
  for (int b : search.branches) search.branch_set.add(b);
  search.paths.assign(search.pairs.size(), {});
  if (!search.solve(0)) return std::nullopt;
  return SubdivisionWitness{kind, search.branches, search.paths};
}

}  // namespace

int euler_edge_bound(int n) {
  if (n < 3) throw std::invalid_argument("euler_edge_bound: need n >= 3");
  return 3 * n - 6;
}

bool planar_decision(const Graph& g) { return decide_or_embed(g, nullptr); }

PlanarityResult is_planar(const Graph& g) {
  std::vector<std::vector<int>> rotation(g.vertex_count());
  if (decide_or_embed(g, &rotation)) {
    RotationSystem embedding(g, std::move(rotation));
    if (!embedding.euler_ok()) throw std::logic_error("constructed embedding fails the Euler check");
    return PlanarityResult{true, std::move(embedding), std::nullopt};
  }
  SubdivisionWitness witness = extract_witness(g);
  if (!validate_witness(g, witness)) throw std::logic_error("extracted witness fails validation");
  return PlanarityResult{false, std::nullopt, std::move(witness)};
}

bool validate_witness(const Graph& g, const SubdivisionWitness& w) {
  std::size_t branch_count = w.kind == SubdivisionKind::K5 ? 5 : 6;
  if (w.branch_vertices.size() != branch_count) return false;
  VertexSet branch_set;
  for (int b : w.branch_vertices) {
    if (b < 0 || b >= g.vertex_count() || branch_set.contains(b)) return false;
    branch_set.add(b);
  }

  std::vector<std::pair<int, int>> required;
  if (w.kind == SubdivisionKind::K5) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) required.emplace_back(w.branch_vertices[i], w.branch_vertices[j]);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) required.emplace_back(w.branch_vertices[i], w.branch_vertices[j]);
  }
  if (w.paths.size() != required.size()) return false;

  VertexSet interior_seen;
  for (std::size_t t = 0; t < required.size(); ++t) {
    const auto& path = w.paths[t];
    if (path.size() < 2) return false;
    auto [a, b] = required[t];
    bool forward = path.front() == a && path.back() == b;
    bool backward = path.front() == b && path.back() == a;
    if (!forward && !backward) return false;
    VertexSet in_path;
    for (std::size_t s = 0; s < path.size(); ++s) {
      int v = path[s];
      if (v < 0 || v >= g.vertex_count() || in_path.contains(v)) return false;
      in_path.add(v);
      if (s + 1 < path.size() && !g.has_edge(v, path[s + 1])) return false;
      if (s > 0 && s + 1 < path.size()) {
        // Internal vertices: distinct across paths and never branch vertices,
        // so they keep degree 2 within the witness.
        if (branch_set.contains(v) || interior_seen.contains(v)) return false;
        interior_seen.add(v);
      }
    }
  }
  return true;
}

std::optional<SubdivisionWitness> subdivision_oracle(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10) throw std::invalid_argument("subdivision_oracle: n too large");
  if (g.edge_count() < 9) return std::nullopt;  // K33 needs 9 edges, K5 needs 10

  if (n >= 5 && g.edge_count() >= 10) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != 5) continue;
      if (auto w = try_pattern(g, SubdivisionKind::K5, VertexSet(static_cast<std::uint16_t>(mask)).to_vector()))
        return w;
    }
  }
  if (n >= 6) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) != 6) continue;
      std::vector<int> six = VertexSet(static_cast<std::uint16_t>(mask)).to_vector();
      // Unordered side split: keep the smallest vertex on side A.
      for (int split = 0; split < (1 << 6); ++split) {
        if (__builtin_popcount(split) != 3 || !(split & 1)) continue;
        std::vector<int> branches;
        for (int i = 0; i < 6; ++i)
          if ((split >> i) & 1) branches.push_back(six[i]);
        for (int i = 0; i < 6; ++i)
          if (!((split >> i) & 1)) branches.push_back(six[i]);
        if (auto w = try_pattern(g, SubdivisionKind::K33, std::move(branches))) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace bpv
