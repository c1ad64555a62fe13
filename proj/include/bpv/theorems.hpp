// Mechanized proof steps for the nine-vertex argument: the outer-face
// degree dichotomy, outer-face shrinking on K8 pairs, and the chord-case
// analysis that certifies the complement of a restricted K8 page nonplanar.

#ifndef BPV_THEOREMS_HPP
#define BPV_THEOREMS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bpv/biplanar.hpp"
#include "bpv/embedding.hpp"
#include "bpv/kuratowski.hpp"
#include "bpv/planarity.hpp"

namespace bpv {

// An embedded 8-vertex planar graph whose outer face is the 5-cycle
// outer_cycle and whose three interior vertices are pairwise non-adjacent.
struct Theorem2Instance {
  RotationSystem h;
  std::array<int, 5> outer_cycle;  // a1..a5 in cyclic order
  std::array<int, 3> interior;     // u, v, w
};

// Description of the first violated instance invariant, or nullopt.
std::optional<std::string> instance_defect(const Theorem2Instance& inst);

enum class ChordCaseKind { zero_chords, one_chord, two_chords };

struct ChordCase {
  ChordCaseKind kind;
  std::vector<Edge> chords;
};

struct Claim1Outcome {
  enum class Kind {
    high_degree_vertex,      // an outer vertex of degree >= 5
    complement_certificate,  // outer three vs innermost three form a K33 pattern in the complement
    complement_witness,      // fallback: a subdivision witness for the complement
  };
  Kind kind;
  int vertex = -1;
  std::optional<KuratowskiCertificate> certificate;
  std::optional<SubdivisionWitness> witness;
};

// The degree dichotomy for an embedded 9-vertex triangulation: either some
// outer-face vertex has degree at least five, or the three outer vertices
// paired against the three vertices inside the hole left by their removal
// give a verified condition-(i) certificate for the complement (with a
// plain nonplanarity witness as fallback).
Claim1Outcome claim1_check(const RotationSystem& t);

// Shrinks the outer face of p.first to a 5-cycle, one vertex per step:
// pick s on both the outer face and the tracked face of second, close the
// edge between s's outer neighbors inside the outer face (rerouting it if
// first already has it, transferring it from second otherwise). Throws if
// no shared vertex exists or if the three final interior vertices do not
// all lie on the tracked face.
BiplanarPair shrink_outer_face(BiplanarPair p, const Face& f, const Face& f_bar);

// The embedded subgraph induced by the outer cycle, interior left isolated
// so vertex labels stay put. Its outer face is the pentagon.
RotationSystem h_prime(const Theorem2Instance& inst);

// The face of h_prime that interior vertex z sits in.
Face containing_face_in_h_prime(const Theorem2Instance& inst, int z);

ChordCase classify_chords(const Theorem2Instance& inst);

// The interior vertex inside internal face f of h_prime that is adjacent to
// every boundary vertex of f (smallest such). Throws if none: the instance
// was not edge-maximal.
int claim2_witness(const Theorem2Instance& inst, const Face& f);

// Certificate for the complement of the instance, chosen by chord case.
// The instance is re-maximalized internally first; by monotonicity the
// certificate also verifies against the original instance's complement.
KuratowskiCertificate theorem2_certificate(const Theorem2Instance& inst);

// The exhaustive instance family: every embedded triangulation of the
// pentagon-with-three-interior-vertices region, with the interior triangle
// edges removed and the page re-maximalized under the frozen pairs.
std::vector<Theorem2Instance> generate_theorem2_instances();

// floor((6k + 1 + sqrt(36k^2 - 36k + 1)) / 2) + 1, in exact integer
// arithmetic. The smallest complete graph with no crossing-free drawing in
// k planes has at most this many vertices.
unsigned long long nu_upper_bound(unsigned long long k);

}  // namespace bpv

#endif  // BPV_THEOREMS_HPP
