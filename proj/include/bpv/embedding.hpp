// Combinatorial embeddings as rotation systems.
//
// A rotation system stores, for each vertex, the cyclic order of its
// neighbors. Faces are recovered by tracing directed edges with the rule
//   next(u -> v) = (v -> w), w = successor of u in the rotation at v,
// which partitions the directed edges into closed walks. An embedding is
// accepted as planar when every connected component with edges satisfies
// V - E + F = 2 for the walks it owns (each component drawn crossing-free
// in its own region of the plane).
//
// "Outer face" is pure bookkeeping: a designated face identifier, carried
// through the operations that the proof pipeline needs it for.

#ifndef BPV_EMBEDDING_HPP
#define BPV_EMBEDDING_HPP

#include <utility>
#include <vector>

#include "bpv/graph.hpp"

namespace bpv {

// A face, identified by its boundary walk rotated to the lexicographically
// smallest starting point, so equal faces compare equal. The walk lists the
// source vertex of each directed edge in trace order; a vertex may repeat
// (cut vertices). Edgeless embeddings use the empty face.
struct Face {
  std::vector<int> boundary;

  static Face from_walk(std::vector<int> walk);

  int length() const { return static_cast<int>(boundary.size()); }
  VertexSet vertex_set() const;
  bool contains(int v) const { return vertex_set().contains(v); }
  // True when the boundary is a cycle of length >= 3 without repeated
  // vertices.
  bool is_simple_cycle() const;

  friend bool operator==(const Face& a, const Face& b) = default;
  friend auto operator<=>(const Face& a, const Face& b) = default;
};

class RotationSystem {
 public:
  RotationSystem() = default;
  // Throws if some rotation is not a permutation of that vertex's
  // neighbors. Designates the canonically smallest face as outer.
  RotationSystem(Graph g, std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }

  const Face& outer_face() const { return outer_; }
  void set_outer_face(const Face& f);  // throws if f is not a face

  // All faces, canonically sorted.
  std::vector<Face> faces() const;
  bool has_face(const Face& f) const;

  // Per-component Euler test; true iff the rotation system is a planar
  // embedding of every component.
  bool euler_ok() const;

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) = default;

 private:
  friend struct EmbeddingOps;

  Graph graph_;
  std::vector<std::vector<int>> rotation_;
  Face outer_;
};

struct EdgeInsertion {
  RotationSystem embedding;
  // The two faces replacing f: `with_section_from_v` is traced from the new
  // edge u->v and carries f's boundary from v around to u; the other face
  // carries the section from u to v. When f was the outer face, the first
  // becomes the new outer face; callers that need the other one re-designate.
  Face with_section_from_v;
  Face with_section_from_u;
};

// Splits face f by the new edge uv. Both endpoints must lie on f's boundary
// and uv must not be an edge yet.
EdgeInsertion insert_edge_in_face(const RotationSystem& e, int u, int v, const Face& f);

// Connects two components: u on face fu of its component, v either on face
// fv of a different component or isolated (pass the empty face). The two
// faces merge into one region.
RotationSystem connect_in_faces(const RotationSystem& e, int u, const Face& fu, int v, const Face& fv);

// Removes an existing edge; the two incident faces merge (or, for a bridge,
// the single incident walk splits).
RotationSystem remove_edge_embedded(const RotationSystem& e, int u, int v);

// Adds a new vertex (label = old vertex count) inside face f, adjacent to
// every boundary vertex, splitting f into one triangle per boundary corner.
// f must be a simple cycle.
RotationSystem stellate_face(const RotationSystem& e, const Face& f);

// Removes vertex r, relabeling the remaining vertices densely, and returns
// the face created where r used to be. If r was on the outer face the
// merged face becomes outer.
std::pair<RotationSystem, Face> delete_vertex(const RotationSystem& e, int r);

// Drops all arcs at each vertex of `zap`, leaving them isolated but keeping
// labels. Used to look at induced sub-embeddings without relabeling.
RotationSystem isolate_vertices(const RotationSystem& e, VertexSet zap);

// True iff the graph is connected, has at least three vertices, and every
// face boundary is a 3-cycle.
bool is_triangulation(const RotationSystem& e);

VertexSet vertices_on_face(const RotationSystem& e, const Face& f);

}  // namespace bpv

#endif  // BPV_EMBEDDING_HPP
