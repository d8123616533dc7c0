#include "modcard/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace modcard {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask needs universe <= 64");
  VertexSet s(universe);
  if (universe > 0) {
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    s.words_[0] = mask;
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += __builtin_popcountll(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<Vertex>(w * 64 + __builtin_ctzll(words_[w]));
  return -1;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (n_ > 64) throw std::logic_error("mask() needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

void VertexSet::check_same(const VertexSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & o.words_[w]) return true;
  return false;
}

int VertexSet::intersection_size(const VertexSet& o) const {
  check_same(o);
  int c = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) c += __builtin_popcountll(words_[w] & o.words_[w]);
  return c;
}

VertexSet VertexSet::operator|(const VertexSet& o) const { VertexSet r = *this; return r |= o; }
VertexSet VertexSet::operator&(const VertexSet& o) const { VertexSet r = *this; return r &= o; }
VertexSet VertexSet::operator-(const VertexSet& o) const { VertexSet r = *this; return r -= o; }

VertexSet VertexSet::complement() const { return full(n_) - *this; }

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

bool VertexSet::operator<(const VertexSet& o) const {
  auto a = members(), b = o.members();
  if (a != b) return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  return n_ < o.n_;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw std::invalid_argument("duplicate edge");
  }
  m_ = static_cast<long long>(edges.size());
  if (n <= kDenseLimit) {
    rows_.assign(n, VertexSet(n));
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : adj_[v]) rows_[v].insert(u);
  }
}

const VertexSet& Graph::row(Vertex v) const {
  if (rows_.empty()) throw std::logic_error("bitset rows unavailable for graphs this large");
  return rows_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!rows_.empty()) return rows_[u].contains(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// --------------------------------------------------------------- operations

Graph complement(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.n(), e);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back(g.n());
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().insert(v);
      for (Vertex u : g.neighbors(v))
        if (comp[u] == -1) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
  }
  return out;  // seeds are visited in ascending order, so blocks are ordered by minimum vertex
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::invalid_argument("vertex set does not match graph");
  InducedSubgraph r;
  r.from_host.assign(g.n(), -1);
  s.for_each([&](Vertex v) {
    r.from_host[v] = static_cast<Vertex>(r.to_host.size());
    r.to_host.push_back(v);
  });
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex nv = 0; nv < static_cast<Vertex>(r.to_host.size()); ++nv)
    for (Vertex u : g.neighbors(r.to_host[nv])) {
      Vertex nu = r.from_host[u];
      if (nu > nv) e.emplace_back(nv, nu);
    }
  r.graph = Graph(static_cast<int>(r.to_host.size()), e);
  return r;
}

VertexSet lift(const InducedSubgraph& sub, const VertexSet& s, int host_n) {
  VertexSet out(host_n);
  s.for_each([&](Vertex v) { out.insert(sub.to_host[v]); });
  return out;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree_into(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.n()) throw std::invalid_argument("vertex set does not match graph");
  if (x.size() == g.n()) throw std::invalid_argument("min_degree_into needs at least one vertex outside X");
  int best = g.n();
  for (Vertex v = 0; v < g.n(); ++v) {
    if (x.contains(v)) continue;
    int c = 0;
    for (Vertex u : g.neighbors(v)) c += x.contains(u);
    best = std::min(best, c);
  }
  return best;
}

// ----------------------------------------------------------------- builders

Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  auto e = path_graph(n).edges();
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), e);
}

Graph join(const Graph& a, const Graph& b) {
  auto e = disjoint_union(a, b).edges();
  for (int u = 0; u < a.n(); ++u)
    for (int v = 0; v < b.n(); ++v) e.emplace_back(u, a.n() + v);
  return Graph(a.n() + b.n(), e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), e);
}

// ------------------------------------------------------------------ file io

Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto pos = out.find_first_not_of(" \t\r");
      if (pos == std::string::npos || out[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("edge list: missing header");
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header '" + line + "'");
  }
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(m);
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("edge list: bad edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: vertex out of range");
    e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<int>(n), e);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace modcard
