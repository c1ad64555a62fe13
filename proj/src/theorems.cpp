#include "bpv/theorems.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace bpv {

namespace {

VertexSet array_set(const int* begin, const int* end) {
  VertexSet s;
  for (const int* it = begin; it != end; ++it) s.add(*it);
  return s;
}

Face pentagon_face(const std::array<int, 5>& cycle) {
  return Face::from_walk(std::vector<int>(cycle.begin(), cycle.end()));
}

Face pentagon_face_reversed(const std::array<int, 5>& cycle) {
  return Face::from_walk(std::vector<int>(cycle.rbegin(), cycle.rend()));
}

std::vector<Edge> frozen_pairs(const Theorem2Instance& inst) {
  return {make_edge(inst.interior[0], inst.interior[1]), make_edge(inst.interior[0], inst.interior[2]),
          make_edge(inst.interior[1], inst.interior[2])};
}

int cycle_position(const std::array<int, 5>& cycle, int v) {
  for (int i = 0; i < 5; ++i)
    if (cycle[i] == v) return i;
  throw std::logic_error("vertex not on the outer cycle");
}

// Labels a1..a5 starting the cycle at `start` position, walking forward.
std::array<int, 5> relabeled_cycle(const std::array<int, 5>& cycle, int start) {
  std::array<int, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = cycle[(start + i) % 5];
  return out;
}

}  // namespace

std::optional<std::string> instance_defect(const Theorem2Instance& inst) {
  if (inst.h.vertex_count() != 8) return "instance must have eight vertices";
  VertexSet outer = array_set(inst.outer_cycle.data(), inst.outer_cycle.data() + 5);
  VertexSet inner = array_set(inst.interior.data(), inst.interior.data() + 3);
  if (outer.size() != 5 || inner.size() != 3 || outer.intersects(inner))
    return "outer cycle and interior must partition the vertices";
  if ((outer | inner) != VertexSet::full(8)) return "vertex labels out of range";
  if (!inst.h.euler_ok()) return "embedding fails the Euler check";
  const Face& f = inst.h.outer_face();
  if (f != pentagon_face(inst.outer_cycle) && f != pentagon_face_reversed(inst.outer_cycle))
    return "outer face boundary is not the designated 5-cycle";
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (inst.h.graph().has_edge(inst.interior[i], inst.interior[j]))
        return "interior vertices must be pairwise non-adjacent";
  return std::nullopt;
}

Claim1Outcome claim1_check(const RotationSystem& t) {
  if (!is_triangulation(t)) throw std::invalid_argument("claim1_check: input is not a triangulation");
  VertexSet outer = t.outer_face().vertex_set();

  for (int v : outer)
    if (t.graph().degree(v) >= 5) return Claim1Outcome{Claim1Outcome::Kind::high_degree_vertex, v, {}, {}};

  // All outer degrees are at most four. Remove the outer triangle; the hole
  // it leaves should be bounded by a 3-cycle, and the three vertices inside
  // that hole see none of the removed ones, giving a K33 pattern in the
  // complement.
  std::vector<int> removed = outer.to_vector();
  RotationSystem current = t;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) current = delete_vertex(current, *it).first;

  std::vector<int> survivors;  // survivor labels in the original graph
  for (int v = 0; v < t.vertex_count(); ++v)
    if (!outer.contains(v)) survivors.push_back(v);

  KuratowskiCertificate certificate;
  certificate.kind = CertificateKind::condition_i;
  VertexSet hole = current.outer_face().vertex_set();
  Graph complement = t.graph().complement();
  if (hole.size() == 3) {
    for (int v : outer) certificate.parts_a.push_back(VertexSet{v});
    for (int c = 0; c < 6; ++c)
      if (!hole.contains(c)) certificate.parts_b.push_back(VertexSet{survivors[c]});
    if (certificate.parts_b.size() == 3 && verify(complement, certificate))
      return Claim1Outcome{Claim1Outcome::Kind::complement_certificate, -1, std::move(certificate), {}};
  }

  auto result = is_planar(complement);
  if (result.planar)
    throw std::logic_error("claim1_check: complement of a 9-vertex triangulation cannot be planar");
  return Claim1Outcome{Claim1Outcome::Kind::complement_witness, -1, {}, std::move(*result.subdivision)};
}

BiplanarPair shrink_outer_face(BiplanarPair p, const Face& f, const Face& f_bar) {
  if (auto violation = check_pair(p, Graph::complete(p.n())))
    throw std::invalid_argument("shrink_outer_face: invalid pair: " + violation->invariant);
  if (p.n() != 8) throw std::invalid_argument("shrink_outer_face: expected a K8 pair");
  if (f != p.first.outer_face()) throw std::invalid_argument("shrink_outer_face: f is not the outer face of first");
  if (!f.is_simple_cycle() || f.length() < 5)
    throw std::invalid_argument("shrink_outer_face: outer face must be a k-cycle, k >= 5");
  if (!p.second.has_face(f_bar) || f_bar.vertex_set().size() < 3)
    throw std::invalid_argument("shrink_outer_face: f_bar must be a face of second with at least three vertices");

  // Track f_bar through edge removals by parking it as second's outer face:
  // removals re-point a destroyed outer face at the surviving walk that
  // shares its boundary arcs.
  p.second.set_outer_face(f_bar);

  while (p.first.outer_face().length() > 5) {
    Face outer = p.first.outer_face();
    if (!outer.is_simple_cycle()) throw std::logic_error("shrink_outer_face: outer boundary stopped being a cycle");
    VertexSet shared = outer.vertex_set() & p.second.outer_face().vertex_set();
    if (shared.empty())
      throw std::runtime_error("shrink_outer_face: no outer vertex lies on the tracked face of second");
    int s = shared.smallest();
    int len = outer.length();
    int pos = static_cast<int>(std::find(outer.boundary.begin(), outer.boundary.end(), s) - outer.boundary.begin());
    int x = outer.boundary[(pos + len - 1) % len];
    int y = outer.boundary[(pos + 1) % len];

    if (p.first.graph().has_edge(x, y)) {
      // xy is drawn elsewhere in first; redraw it inside the outer face.
      p.first = remove_edge_embedded(p.first, x, y);
    } else {
      p.second = remove_edge_embedded(p.second, x, y);
    }
    auto insertion = insert_edge_in_face(p.first, x, y, p.first.outer_face());
    p.first = insertion.embedding;
    const Face& without_s =
        insertion.with_section_from_v.contains(s) ? insertion.with_section_from_u : insertion.with_section_from_v;
    p.first.set_outer_face(without_s);
  }

  VertexSet interior = VertexSet::full(8).minus(p.first.outer_face().vertex_set());
  if (!interior.subset_of(p.second.outer_face().vertex_set()))
    throw std::runtime_error("shrink_outer_face: an interior vertex left the tracked face of second");
  return p;
}

RotationSystem h_prime(const Theorem2Instance& inst) {
  RotationSystem hp = isolate_vertices(inst.h, array_set(inst.interior.data(), inst.interior.data() + 3));
  hp.set_outer_face(inst.h.outer_face());
  return hp;
}

Face containing_face_in_h_prime(const Theorem2Instance& inst, int z) {
  VertexSet others;
  for (int v : inst.interior)
    if (v != z) others.add(v);
  RotationSystem with_z = isolate_vertices(inst.h, others);
  if (with_z.graph().degree(z) == 0)
    throw std::invalid_argument("containing_face_in_h_prime: interior vertex has no edges");

  auto before = with_z.faces();
  RotationSystem without_z = isolate_vertices(with_z, VertexSet{z});
  std::map<Face, int> leftover;
  for (const Face& face : without_z.faces()) ++leftover[face];
  for (const Face& face : before)
    if (!face.contains(z)) --leftover[face];
  for (auto& [face, count] : leftover)
    if (count > 0) return face;
  throw std::logic_error("containing_face_in_h_prime: no merged face found");
}

ChordCase classify_chords(const Theorem2Instance& inst) {
  std::vector<Edge> chords;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      int gap = std::min(j - i, 5 - (j - i));
      if (gap == 1) continue;  // cycle edge slot
      if (inst.h.graph().has_edge(inst.outer_cycle[i], inst.outer_cycle[j]))
        chords.push_back(make_edge(inst.outer_cycle[i], inst.outer_cycle[j]));
    }
  }
  if (chords.size() > 2) throw std::invalid_argument("classify_chords: more than two chords");
  if (chords.size() == 2) {
    VertexSet a{chords[0].first, chords[0].second};
    VertexSet b{chords[1].first, chords[1].second};
    if (!(a & b).size()) throw std::invalid_argument("classify_chords: two chords with no shared vertex");
    return ChordCase{ChordCaseKind::two_chords, std::move(chords)};
  }
  if (chords.size() == 1) return ChordCase{ChordCaseKind::one_chord, std::move(chords)};
  return ChordCase{ChordCaseKind::zero_chords, {}};
}

int claim2_witness(const Theorem2Instance& inst, const Face& f) {
  RotationSystem hp = h_prime(inst);
  if (!hp.has_face(f) || f == hp.outer_face())
    throw std::invalid_argument("claim2_witness: f is not an internal face of h_prime");
  VertexSet boundary = f.vertex_set();
  bool saw_inside = false;
  for (int z : inst.interior) {
    if (inst.h.graph().degree(z) == 0) continue;
    if (containing_face_in_h_prime(inst, z) != f) continue;
    saw_inside = true;
    if (boundary.subset_of(inst.h.graph().neighbors(z))) return z;
  }
  if (!saw_inside) throw std::invalid_argument("claim2_witness: face contains none of the interior vertices");
  throw std::invalid_argument("claim2_witness: no interior vertex covers the face boundary; instance not maximal");
}

KuratowskiCertificate theorem2_certificate(const Theorem2Instance& inst) {
  if (auto defect = instance_defect(inst)) throw std::invalid_argument("theorem2_certificate: " + *defect);

  Theorem2Instance maximal = inst;
  maximal.h = restricted_augment_embedding(inst.h, frozen_pairs(inst)).first;

  ChordCase chord_case = classify_chords(maximal);
  const Graph& h = maximal.h.graph();
  const auto& interior = maximal.interior;

  KuratowskiCertificate certificate;
  if (chord_case.kind == ChordCaseKind::zero_chords) {
    // The hub covers the whole pentagon; the other two interior vertices
    // each touch at most two consecutive cycle vertices, so some cycle
    // vertex avoids both.
    RotationSystem hp = h_prime(maximal);
    Face inner;
    for (const Face& face : hp.faces())
      if (face != hp.outer_face()) inner = face;
    int hub = claim2_witness(maximal, inner);
    std::vector<int> rest;
    for (int z : interior)
      if (z != hub) rest.push_back(z);
    int start = -1;
    for (int i = 0; i < 5 && start < 0; ++i) {
      int c = maximal.outer_cycle[i];
      if (!h.has_edge(c, rest[0]) && !h.has_edge(c, rest[1])) start = i;
    }
    if (start < 0) throw std::logic_error("theorem2_certificate: no cycle vertex avoids both non-hub vertices");
    auto a = relabeled_cycle(maximal.outer_cycle, start);
    certificate.kind = CertificateKind::condition_ii;
    certificate.parts_a = {VertexSet{rest[0]}, VertexSet{rest[1]}, VertexSet{a[0]}, VertexSet{a[1], a[3]},
                           VertexSet{a[2], a[4]}};
  } else if (chord_case.kind == ChordCaseKind::one_chord) {
    // Relabel so the chord is (a2, a5); the quad face (a2..a5) of h_prime
    // holds a vertex adjacent to all four of its corners.
    Edge chord = chord_case.chords.front();
    int px = cycle_position(maximal.outer_cycle, chord.first);
    int py = cycle_position(maximal.outer_cycle, chord.second);
    int apex = (py - px + 5) % 5 == 2 ? (px + 1) % 5 : (py + 1) % 5;
    auto a = relabeled_cycle(maximal.outer_cycle, apex);
    Face quad = Face{};
    RotationSystem hp = h_prime(maximal);
    for (const Face& face : hp.faces())
      if (face != hp.outer_face() && face.vertex_set() == VertexSet{a[1], a[2], a[3], a[4]}) quad = face;
    if (quad.boundary.empty()) throw std::logic_error("theorem2_certificate: quad face of the one-chord case missing");
    int covering = claim2_witness(maximal, quad);
    std::vector<int> rest;
    for (int z : interior)
      if (z != covering) rest.push_back(z);
    certificate.kind = CertificateKind::condition_i;
    certificate.parts_a = {VertexSet{rest[0]}, VertexSet{rest[1]}, VertexSet{a[0]}};
    certificate.parts_b = {VertexSet{covering}, VertexSet{a[1], a[3]}, VertexSet{a[2], a[4]}};
  } else {
    // Two chords from a shared vertex a1: every interior vertex reaches at
    // most one of {a2, a4} and one of {a3, a5}.
    VertexSet s0{chord_case.chords[0].first, chord_case.chords[0].second};
    VertexSet s1{chord_case.chords[1].first, chord_case.chords[1].second};
    int shared = (s0 & s1).smallest();
    auto a = relabeled_cycle(maximal.outer_cycle, cycle_position(maximal.outer_cycle, shared));
    certificate.kind = CertificateKind::condition_ii;
    certificate.parts_a = {VertexSet{interior[0]}, VertexSet{interior[1]}, VertexSet{interior[2]},
                           VertexSet{a[1], a[3]}, VertexSet{a[2], a[4]}};
  }

  if (!verify(inst.h.graph().complement(), certificate))
    throw std::logic_error("theorem2_certificate: constructed certificate fails verification");
  return certificate;
}

std::vector<Theorem2Instance> generate_theorem2_instances() {
  const std::array<int, 5> cycle{0, 1, 2, 3, 4};
  const std::array<int, 3> interior{5, 6, 7};

  // Seed: pentagon, hub 5 on the inner face, 6 and 7 stacked into inner
  // triangles. Stellation labels new vertices n, n+1, ... in order.
  RotationSystem seed = [] {
    Graph c5 = Graph::cycle(5);
    std::vector<std::vector<int>> rotation(5);
    for (int i = 0; i < 5; ++i) rotation[i] = {(i + 4) % 5, (i + 1) % 5};
    RotationSystem base(std::move(c5), std::move(rotation));
    base.set_outer_face(pentagon_face({0, 1, 2, 3, 4}));
    for (int step = 0; step < 3; ++step) {
      Face inner;
      for (const Face& face : base.faces())
        if (face != base.outer_face()) inner = face;
      base = stellate_face(base, inner);
    }
    return base;
  }();

  // Close the disk triangulations under internal diagonal flips. The outer
  // pentagon never changes, so every reachable embedding stays a disk
  // triangulation over the same boundary.
  std::map<std::string, RotationSystem> triangulations;
  std::deque<RotationSystem> queue;
  triangulations.emplace(to_graph6(seed.graph()), seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    RotationSystem current = std::move(queue.front());
    queue.pop_front();
    auto faces = current.faces();
    auto third = [&](int u, int v) -> int {
      for (const Face& face : faces) {
        if (face == current.outer_face()) continue;
        for (int t = 0; t < 3; ++t)
          if (face.boundary[t] == u && face.boundary[(t + 1) % 3] == v) return face.boundary[(t + 2) % 3];
      }
      return -1;
    };
    for (auto [u, v] : current.graph().edges()) {
      int x = third(u, v);
      int y = third(v, u);
      if (x < 0 || y < 0 || x == y) continue;  // skip edges touching the outer face
      if (current.graph().has_edge(x, y)) continue;
      RotationSystem cut = remove_edge_embedded(current, u, v);
      Face quad;
      for (const Face& face : cut.faces())
        if (face.length() == 4 && face.vertex_set() == VertexSet{u, v, x, y}) quad = face;
      if (quad.boundary.empty()) continue;
      RotationSystem flipped = insert_edge_in_face(cut, x, y, quad).embedding;
      bool all_triangles = true;
      for (const Face& face : flipped.faces())
        if (face != flipped.outer_face() && face.length() != 3) all_triangles = false;
      if (!all_triangles) throw std::logic_error("internal flip left a non-triangular face");
      auto [it, fresh] = triangulations.emplace(to_graph6(flipped.graph()), flipped);
      if (fresh) queue.push_back(it->second);
    }
  }

  // Strip the frozen edges, re-maximalize, dedup.
  std::vector<Edge> frozen{make_edge(5, 6), make_edge(5, 7), make_edge(6, 7)};
  std::map<std::string, Theorem2Instance> instances;
  for (auto& [key, embedding] : triangulations) {
    RotationSystem h = embedding;
    for (auto [u, v] : frozen)
      if (h.graph().has_edge(u, v)) h = remove_edge_embedded(h, u, v);
    h = restricted_augment_embedding(std::move(h), frozen).first;
    Theorem2Instance inst{std::move(h), cycle, interior};
    instances.emplace(to_graph6(inst.h.graph()), std::move(inst));
  }

  std::vector<Theorem2Instance> out;
  out.reserve(instances.size());
  for (auto& [key, inst] : instances) out.push_back(std::move(inst));
  return out;
}

unsigned long long nu_upper_bound(unsigned long long k) {
  if (k < 1) throw std::invalid_argument("nu_upper_bound: need k >= 1");
  if (k > 500'000'000ull) throw std::invalid_argument("nu_upper_bound: k too large for exact 64-bit evaluation");
  unsigned long long discriminant = 36 * k * k - 36 * k + 1;
  unsigned long long x = discriminant, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + discriminant / x) / 2;
  }
  return (6 * k + 1 + x) / 2 + 1;
}

}  // namespace bpv
