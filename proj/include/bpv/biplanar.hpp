// Biplanar pairs: an edge partition of a host graph (usually K_n) into two
// planar-embedded halves, plus the edge-transfer augmentation that drives
// the thickness arguments.

#ifndef BPV_BIPLANAR_HPP
#define BPV_BIPLANAR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpv/embedding.hpp"
#include "bpv/graph.hpp"

namespace bpv {

struct BiplanarPair {
  RotationSystem first;
  RotationSystem second;

  int n() const { return first.vertex_count(); }
};

struct PairViolation {
  std::string invariant;  // "shape", "partition", "euler-bound", "embedding", "planarity"
  std::string detail;
};

// First violated invariant of p as a decomposition of `target`, or nullopt
// if p is a valid biplanar pair for it.
std::optional<PairViolation> check_pair(const BiplanarPair& p, const Graph& target);

// Transfers same-face non-adjacent pairs from second to first until first
// is a triangulation; joins components of first through designated faces
// when no in-face move remains. The pair must partition K_n.
BiplanarPair augment_to_maximal(BiplanarPair p);

// Edge-maximality under Theorem-2 rules: only internal faces of `first`
// receive edges and frozen pairs are never added. No connectivity joins.
BiplanarPair restricted_augment(BiplanarPair p, const std::vector<Edge>& frozen);

// Same fixpoint for a lone embedding; missing edges are pulled from the
// implicit complement, which need not be planar. Returns the result and the
// edges added, in insertion order.
std::pair<RotationSystem, std::vector<Edge>> restricted_augment_embedding(RotationSystem h,
                                                                          const std::vector<Edge>& frozen);

struct ThicknessResult {
  bool biplanar;
  std::optional<BiplanarPair> witness;
  std::string note;  // which argument decided: planar, catalog scan, or search
};

// Thickness <= 2 decision for n <= 9. Complete graphs go through the
// maximal-planar catalog reduction; everything else through a backtracking
// edge bipartition with incremental planarity pruning.
ThicknessResult thickness_at_most_2(const Graph& g);

struct CrossingResult {
  bool at_most_one;
  std::optional<std::pair<Edge, Edge>> crossing_pair;  // absent when planar
};

// True iff g is planar or one crossing suffices: some pair of independent
// edges can be replaced by a degree-4 crossing vertex so that the rest
// embeds. n <= 14.
CrossingResult crossing_le_1(const Graph& g);

struct BiplanarCrossingWitness {
  int value;  // always 1
  Graph triangulation;                  // planar side, drawn crossing-free
  std::pair<Edge, Edge> crossing_pair;  // the one crossing in the complement
};

// The biplanar crossing number of K9: scans the 9-vertex triangulation
// catalog for a member whose complement draws with one crossing. Every
// complement is also confirmed nonplanar, which rules out zero.
BiplanarCrossingWitness biplanar_crossing_k9();

// An unvalidated claimed pair, as it arrives from outside.
struct ClaimedEmbedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;
};

struct ClaimedPair {
  ClaimedEmbedding first;
  ClaimedEmbedding second;
};

ClaimedPair as_claim(const BiplanarPair& p);

// Rejects any claimed biplanar decomposition of K9, naming the first
// violated invariant. A claim passing every check would contradict the
// 9-vertex theorem, so acceptance is a build-stopping internal error.
PairViolation refute_k9_certificate(const ClaimedPair& p);

}  // namespace bpv

#endif  // BPV_BIPLANAR_HPP
