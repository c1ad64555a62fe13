// Isomorph-free catalogs of maximal planar graphs (triangulations) on up to
// nine vertices, and the catalog-driven verification loops built on them.
//
// Generation grows each (n-1)-vertex catalog member by stellating every
// face, then closes under diagonal flips; flip-connectedness of same-size
// triangulations makes the closure complete, and the tests cross-check the
// counts against an exhaustive filter oracle at small n.

#ifndef BPV_ENUMERATION_HPP
#define BPV_ENUMERATION_HPP

#include <vector>

#include "bpv/biplanar.hpp"
#include "bpv/graph.hpp"
#include "bpv/planarity.hpp"

namespace bpv {

struct TriangulationCatalog {
  int n = 0;
  std::vector<Graph> members;  // canonical forms, sorted by graph6 string
};

// Cached across calls; 4 <= n <= 9.
const TriangulationCatalog& enumerate_triangulations(int n);

// One canonical child per face of the (unique) embedding: the graph with a
// new vertex joined to that face's three corners. Duplicates removed.
std::vector<Graph> stellations(const Graph& triangulation);

// Canonical results of every legal diagonal flip. Duplicates removed.
std::vector<Graph> flip_neighbors(const Graph& triangulation);

struct Theorem1Entry {
  Graph triangulation;          // catalog member
  SubdivisionWitness witness;   // for its complement
};

struct Theorem1Report {
  std::vector<Theorem1Entry> entries;  // one per 9-vertex catalog member
  bool all_nonplanar = false;
};

// For every 9-vertex triangulation, certifies that the complement is
// nonplanar and re-validates the stored witness. A planar complement would
// be an internal error: it would make K9 biplanar.
Theorem1Report verify_theorem1();

// Scans the 8-vertex catalog for a member with planar complement and embeds
// both sides: a biplanar decomposition of K8.
BiplanarPair find_biplanar_k8();

}  // namespace bpv

#endif  // BPV_ENUMERATION_HPP
