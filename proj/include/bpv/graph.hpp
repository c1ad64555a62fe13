// Small undirected simple graphs on at most 16 labeled vertices.
//
// Adjacency is kept as one 16-bit mask per vertex, which keeps the
// exhaustive searches elsewhere in this project (canonical labeling,
// subdivision hunting, catalog oracles) cheap.

#ifndef BPV_GRAPH_HPP
#define BPV_GRAPH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bpv {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// A subset of the vertices 0..15, as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint16_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) add(v);
  }

  static VertexSet full(int n) { return VertexSet(static_cast<std::uint16_t>((1u << n) - 1u)); }

  bool contains(int v) const { return (bits_ >> v) & 1u; }
  void add(int v) { bits_ = static_cast<std::uint16_t>(bits_ | (1u << v)); }
  void remove(int v) { bits_ = static_cast<std::uint16_t>(bits_ & ~(1u << v)); }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint16_t bits() const { return bits_; }
  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  int smallest() const;  // lowest set bit; -1 if empty

  VertexSet operator|(VertexSet o) const { return VertexSet(static_cast<std::uint16_t>(bits_ | o.bits_)); }
  VertexSet operator&(VertexSet o) const { return VertexSet(static_cast<std::uint16_t>(bits_ & o.bits_)); }
  VertexSet minus(VertexSet o) const { return VertexSet(static_cast<std::uint16_t>(bits_ & ~o.bits_)); }

  std::vector<int> to_vector() const;

  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    iterator(std::uint16_t rest) : rest_(rest) {}
    int operator*() const { return __builtin_ctz(rest_); }
    iterator& operator++() {
      rest_ = static_cast<std::uint16_t>(rest_ & (rest_ - 1));
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint16_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint16_t bits_ = 0;
};

class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph complete_bipartite(int a, int b);

  int vertex_count() const { return n_; }
  int edge_count() const;
  int max_edge_count() const { return n_ * (n_ - 1) / 2; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return __builtin_popcount(adj_[v]); }
  std::vector<Edge> edges() const;  // sorted lexicographically

  Graph complement() const;
  Graph permuted(const std::vector<int>& perm) const;  // vertex i -> perm[i]
  // Induced subgraph on `keep`, vertices relabeled densely in increasing
  // order of old label. Returns the relabeled graph and old labels per
  // new vertex.
  std::pair<Graph, std::vector<int>> induced(VertexSet keep) const;
  // Deletes one vertex, relabeling the rest densely.
  Graph without_vertex(int r) const;

  bool is_connected() const;
  bool connected_within(VertexSet s) const;  // throws on empty s
  VertexSet component_of(int v) const;
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

// graph6 interchange format, bit-exact per the published definition:
// header byte n+63, then ceil(n(n-1)/2 / 6) bytes of upper-triangle bits
// in column-major order x(0,1), x(0,2), x(1,2), ..., six per byte, most
// significant first, each byte offset by 63. Only the n <= 62 header form
// is supported (this library caps n at 16).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Canonical labeling by exhaustive permutation search with prefix pruning:
// isomorphic graphs map to the identical result. Requires n <= 10.
Graph canonical_form(const Graph& g);

}  // namespace bpv

#endif  // BPV_GRAPH_HPP
