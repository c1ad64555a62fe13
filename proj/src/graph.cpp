#include "bpv/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpv {

int VertexSet::smallest() const {
  if (bits_ == 0) return -1;
  return __builtin_ctz(bits_);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
  adj_[u] = static_cast<std::uint16_t>(adj_[u] | (1u << v));
  adj_[v] = static_cast<std::uint16_t>(adj_[v] | (1u << u));
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] = static_cast<std::uint16_t>(adj_[u] & ~(1u << v));
  adj_[v] = static_cast<std::uint16_t>(adj_[v] & ~(1u << u));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permuted: wrong permutation size");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) g.add_edge(perm[u], perm[v]);
  return g;
}

std::pair<Graph, std::vector<int>> Graph::induced(VertexSet keep) const {
  std::vector<int> old_labels = keep.to_vector();
  Graph g(static_cast<int>(old_labels.size()));
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (has_edge(old_labels[i], old_labels[j])) g.add_edge(i, j);
  return {g, old_labels};
}

Graph Graph::without_vertex(int r) const {
  check_vertex(r);
  VertexSet keep = VertexSet::full(n_);
  keep.remove(r);
  return induced(keep).first;
}

VertexSet Graph::component_of(int v) const {
  check_vertex(v);
  std::uint16_t seen = static_cast<std::uint16_t>(1u << v);
  for (;;) {
    std::uint16_t grown = seen;
    for (int u : VertexSet(seen)) grown |= adj_[u];
    if (grown == seen) return VertexSet(seen);
    seen = grown;
  }
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return component_of(0) == VertexSet::full(n_);
}

bool Graph::connected_within(VertexSet s) const {
  if (s.empty()) throw std::invalid_argument("connected_within: empty vertex set");
  if (!s.subset_of(VertexSet::full(n_))) throw std::invalid_argument("connected_within: vertex out of range");
  std::uint16_t inside = s.bits();
  std::uint16_t seen = static_cast<std::uint16_t>(1u << s.smallest());
  for (;;) {
    std::uint16_t grown = seen;
    for (int u : VertexSet(seen)) grown |= (adj_[u] & inside);
    if (grown == seen) return seen == inside;
    seen = grown;
  }
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::uint16_t left = VertexSet::full(n_).bits();
  while (left) {
    VertexSet c = component_of(__builtin_ctz(left));
    out.push_back(c);
    left = static_cast<std::uint16_t>(left & ~c.bits());
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 125) throw std::invalid_argument("graph6: malformed header byte");
  int n = header - 63;
  if (n > Graph::kMaxVertices) throw std::invalid_argument("graph6: vertex count above 16");
  Graph g(n);
  int bit_count = n * (n - 1) / 2;
  int byte_count = (bit_count + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + byte_count) {
    if (static_cast<int>(text.size()) < 1 + byte_count) throw std::invalid_argument("graph6: truncated bit stream");
    throw std::invalid_argument("graph6: trailing bytes");
  }
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = static_cast<unsigned char>(text[1 + bit / 6]);
      if (byte < 63 || byte > 126) throw std::invalid_argument("graph6: byte out of range");
      int value = byte - 63;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit_count = n * (n - 1) / 2;
  int byte_count = (bit_count + 5) / 6;
  std::vector<int> values(byte_count, 0);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) values[bit / 6] |= 1 << (5 - bit % 6);
  for (int v : values) out.push_back(static_cast<char>(v + 63));
  return out;
}

namespace {

// Backtracking search for the labeling whose upper-triangle bit string
// (graph6 column order) is lexicographically maximal. Column k of a partial
// labeling is encoded as an integer with the x(0,k) bit most significant,
// so integer comparison matches bit-string comparison. best_cols holds the
// best prefix seen so far; -1 marks columns below the deepest improvement,
// which any subsequent completion overwrites. Branches are pruned exactly
// when their column loses against the incumbent at the same depth.
struct CanonicalSearch {
  const Graph& g;
  int n;
  std::array<std::int32_t, Graph::kMaxVertices> best_cols;
  std::array<int, Graph::kMaxVertices> chosen{};  // chosen[k] = original vertex at position k
  std::array<int, Graph::kMaxVertices> best_perm{};

  explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    best_cols.fill(-1);
  }

  void run() {
    std::uint16_t used = 0;
    descend(0, used);
  }

  void descend(int k, std::uint16_t& used) {
    if (k == n) {
      for (int i = 0; i < n; ++i) best_perm[chosen[i]] = i;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      std::int32_t col = 0;
      for (int i = 0; i < k; ++i) col |= static_cast<std::int32_t>(g.has_edge(chosen[i], v)) << (k - 1 - i);
      if (col < best_cols[k]) continue;
      if (col > best_cols[k]) {
        best_cols[k] = col;
        for (int t = k + 1; t < n; ++t) best_cols[t] = -1;
      }
      chosen[k] = v;
      used |= static_cast<std::uint16_t>(1u << v);
      descend(k + 1, used);
      used &= static_cast<std::uint16_t>(~(1u << v));
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10) throw std::invalid_argument("canonical_form: n too large for exhaustive canonicalization");
  if (n <= 1) return g;
  CanonicalSearch search(g);
  search.run();
  std::vector<int> perm(search.best_perm.begin(), search.best_perm.begin() + n);
  return g.permuted(perm);
}

}  // namespace bpv
