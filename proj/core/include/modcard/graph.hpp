#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcard {

using Vertex = int;

// Raised when an exhaustive routine is asked to exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-universe bitset over the vertices 0..n-1 of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, const std::vector<Vertex>& members);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const { return n_; }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v);
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int size() const;
  bool empty() const;
  Vertex min() const;  // -1 when empty
  std::vector<Vertex> members() const;
  std::uint64_t mask() const;  // requires universe <= 64

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  int intersection_size(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;
  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  bool operator==(const VertexSet& o) const = default;
  // Orders by sorted member list (lexicographic), then by universe.
  bool operator<(const VertexSet& o) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same(const VertexSet& o) const;
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return n_; }
  long long m() const { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  // Bitset rows are kept only for graphs up to kDenseLimit vertices.
  static constexpr int kDenseLimit = 8192;
  bool dense() const { return !rows_.empty() || n_ == 0; }
  const VertexSet& row(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  VertexSet vertices() const { return VertexSet::full(n_); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;   // new id -> old id
  std::vector<Vertex> from_host; // old id -> new id, -1 when absent
};

Graph complement(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
int max_degree(const Graph& g);
int min_degree_into(const Graph& g, const VertexSet& x);
bool is_connected(const Graph& g);

// Lifts a set over an induced subgraph back to host ids.
VertexSet lift(const InducedSubgraph& sub, const VertexSet& s, int host_n);

// Small builders used throughout tests, benchmarks and generators.
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);  // new id of v is perm[v]

// Edge-list text format: "n m" followed by m lines "u v".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace modcard
