#include "modcard/modular_decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace modcard {

void ModularPartition::normalize() {
  std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
}

std::vector<int> ModularPartition::block_of() const {
  std::vector<int> owner(host_n, -1);
  for (int i = 0; i < size(); ++i) blocks[i].for_each([&](Vertex v) { owner[v] = i; });
  return owner;
}

namespace {

// Number of members of m adjacent to w.
int neighbours_in(const Graph& g, Vertex w, const VertexSet& m) {
  if (g.dense()) return g.row(w).intersection_size(m);
  int c = 0;
  for (Vertex u : g.neighbors(w)) c += m.contains(u);
  return c;
}

}  // namespace

bool is_module(const Graph& g, const VertexSet& m) {
  if (m.universe() != g.n()) throw std::invalid_argument("vertex set does not match graph");
  int sz = m.size();
  if (sz <= 1 || sz == g.n()) return true;
  if (!g.dense()) {
    // Count, for each outside vertex, its neighbours inside m by scanning m's adjacency.
    std::vector<int> hits(g.n(), 0);
    m.for_each([&](Vertex v) {
      for (Vertex u : g.neighbors(v))
        if (!m.contains(u)) ++hits[u];
    });
    for (Vertex w = 0; w < g.n(); ++w)
      if (!m.contains(w) && hits[w] != 0 && hits[w] != sz) return false;
    return true;
  }
  for (Vertex w = 0; w < g.n(); ++w) {
    if (m.contains(w)) continue;
    int c = neighbours_in(g, w, m);
    if (c != 0 && c != sz) return false;
  }
  return true;
}

bool is_modular_partition(const Graph& g, const ModularPartition& p) {
  if (p.host_n != g.n()) return false;
  VertexSet seen(g.n());
  for (const auto& b : p.blocks) {
    if (b.universe() != g.n() || b.empty() || b.intersects(seen)) return false;
    seen |= b;
    if (!is_module(g, b)) return false;
  }
  return seen.size() == g.n();
}

VertexSet module_closure(const Graph& g, const VertexSet& seed) {
  VertexSet s = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    int sz = s.size();
    for (Vertex w = 0; w < g.n(); ++w) {
      if (s.contains(w)) continue;
      int c = neighbours_in(g, w, s);
      if (c != 0 && c != sz) {
        s.insert(w);
        ++sz;
        grew = true;
      }
    }
  }
  return s;
}

ModularPartition maximal_modular_partition(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("maximal modular partition needs at least two vertices");
  ModularPartition p;
  p.host_n = g.n();
  auto cc = connected_components(g);
  if (cc.size() > 1) {
    p.blocks = std::move(cc);
    return p;
  }
  auto co = connected_components(complement(g));
  if (co.size() > 1) {
    p.blocks = std::move(co);
    return p;
  }
  // Prime case: the maximal strong modules are the maximal proper modules and they are disjoint;
  // the one containing v is the union of every proper closure of a pair {v,u}.
  std::vector<char> assigned(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (assigned[v]) continue;
    VertexSet block(g.n(), {v});
    for (Vertex u = 0; u < g.n(); ++u) {
      if (u == v || block.contains(u)) continue;
      VertexSet c = module_closure(g, VertexSet(g.n(), {v, u}));
      if (c.size() < g.n()) block |= c;
    }
    block.for_each([&](Vertex w) { assigned[w] = 1; });
    p.blocks.push_back(block);
  }
  p.normalize();
  return p;
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Parallel: return "parallel";
    case NodeKind::Series: return "series";
    case NodeKind::Prime: return "prime";
  }
  return "?";
}

namespace {

int build_node(const Graph& host, const VertexSet& s, MDTree& t) {
  int id = static_cast<int>(t.nodes.size());
  t.nodes.emplace_back();
  t.nodes[id].vertices = s.members();
  if (s.size() == 1) return id;
  auto sub = induced_subgraph(host, s);
  auto part = maximal_modular_partition(sub.graph);
  NodeKind kind;
  if (!is_connected(sub.graph))
    kind = NodeKind::Parallel;
  else if (!is_connected(complement(sub.graph)))
    kind = NodeKind::Series;
  else
    kind = NodeKind::Prime;
  t.nodes[id].kind = kind;
  std::vector<int> kids;
  for (const auto& b : part.blocks) kids.push_back(build_node(host, lift(sub, b, host.n()), t));
  t.nodes[id].children = std::move(kids);
  return id;
}

}  // namespace

MDTree md_tree(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("modular decomposition needs at least one vertex");
  MDTree t;
  build_node(g, g.vertices(), t);
  return t;
}

int modular_width(const MDTree& t) {
  int w = 0;
  for (const auto& node : t.nodes)
    if (node.kind == NodeKind::Prime) w = std::max(w, static_cast<int>(node.children.size()));
  return w;
}

int modular_width(const Graph& g) { return g.n() == 0 ? 0 : modular_width(md_tree(g)); }

Graph quotient_graph(const Graph& g, const ModularPartition& p) {
  if (p.host_n != g.n()) throw std::invalid_argument("partition does not match graph");
  VertexSet seen(g.n());
  for (const auto& b : p.blocks) {
    if (b.empty() || b.intersects(seen)) throw std::invalid_argument("blocks must be non-empty and disjoint");
    seen |= b;
    if (!is_module(g, b)) throw std::invalid_argument("block is not a module");
  }
  if (seen.size() != g.n()) throw std::invalid_argument("blocks do not cover the vertex set");
  std::vector<Vertex> rep;
  for (const auto& b : p.blocks) rep.push_back(b.min());
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (g.adjacent(rep[i], rep[j])) e.emplace_back(i, j);
  return Graph(p.size(), e);
}

}  // namespace modcard
