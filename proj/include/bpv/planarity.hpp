// Planarity decision with witnesses on both sides: a rotation system when
// planar, a K5/K3,3 subdivision when not.

#ifndef BPV_PLANARITY_HPP
#define BPV_PLANARITY_HPP

#include <optional>
#include <vector>

#include "bpv/embedding.hpp"
#include "bpv/graph.hpp"

namespace bpv {

enum class SubdivisionKind { K5, K33 };

// A subdivision witness: branch vertices plus one internally-disjoint path
// per required edge of the pattern. For K33 the first three branch vertices
// are one side of the bipartition. Paths are listed in pattern-pair order:
// all pairs i<j for K5, row-major (a_i, b_j) for K33.
struct SubdivisionWitness {
  SubdivisionKind kind;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar;
  std::optional<RotationSystem> embedding;     // present iff planar
  std::optional<SubdivisionWitness> subdivision;  // present iff nonplanar
};

// 3n - 6 for n >= 3; the maximum edge count of a planar graph.
int euler_edge_bound(int n);

// Decision only (no witness construction); same verdict as is_planar.
bool planar_decision(const Graph& g);

PlanarityResult is_planar(const Graph& g);

// Mechanical witness check, independent of how the witness was found.
bool validate_witness(const Graph& g, const SubdivisionWitness& w);

// Brute-force referee: enumerates branch-vertex tuples and searches for
// vertex-disjoint connecting paths by backtracking. Returns a witness iff
// the graph contains a K5 or K3,3 subdivision. Requires n <= 10.
std::optional<SubdivisionWitness> subdivision_oracle(const Graph& g);

}  // namespace bpv

#endif  // BPV_PLANARITY_HPP
