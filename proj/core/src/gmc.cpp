#include "modcard/gmc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace modcard {

namespace {

// Merge step for components that already induce class members.
std::vector<VertexSet> merge_members(const GraphClass& c, const Graph& g, const std::vector<VertexSet>& members) {
  if (members.size() == 1) return members;
  VertexSet all(g.n());
  for (const auto& m : members) all |= m;
  auto sub = induced_subgraph(g, all);
  std::vector<VertexSet> out;
  if (c.trivially_mergeable()) {
    for (const auto& b : g_merge(c, sub.graph).blocks) out.push_back(lift(sub, b, g.n()));
    return out;
  }
  if (recognize(c, sub.graph)) return {all};
  // Group members atom by atom; each group is kept whole when it still belongs to that atom.
  std::vector<char> used(members.size(), 0);
  for (const auto& atom : c.atoms()) {
    GraphClass single = atom.tag == ClassTag::BoundedDegForest ? GraphClass::bounded_deg_forest(atom.degree_bound)
                                                               : GraphClass(atom.tag);
    VertexSet group(g.n());
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (!used[i] && recognize(single, induced_subgraph(g, members[i]).graph)) {
        group |= members[i];
        picked.push_back(i);
      }
    if (picked.empty()) continue;
    if (recognize(single, induced_subgraph(g, group).graph)) {
      out.push_back(group);
    } else {
      for (auto i : picked) out.push_back(members[i]);
    }
    for (auto i : picked) used[i] = 1;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    if (!used[i]) out.push_back(members[i]);
  return out;
}

void partition_rec(const GraphClass& c, const Graph& g, const VertexSet& s, std::vector<VertexSet>& out) {
  auto sub = induced_subgraph(g, s);
  if (recognize(c, sub.graph)) {
    out.push_back(s);
    return;
  }
  auto parts = connected_components(sub.graph);
  if (parts.size() == 1) parts = connected_components(complement(sub.graph));
  if (parts.size() == 1) {
    for (const auto& b : maximal_modular_partition(sub.graph).blocks) partition_rec(c, g, lift(sub, b, g.n()), out);
    return;
  }
  std::vector<VertexSet> in_class, rest;
  for (const auto& p : parts) {
    VertexSet host = lift(sub, p, g.n());
    if (recognize(c, induced_subgraph(g, host).graph))
      in_class.push_back(host);
    else
      rest.push_back(host);
  }
  if (!in_class.empty())
    for (auto& b : merge_members(c, g, in_class)) out.push_back(std::move(b));
  for (const auto& r : rest) partition_rec(c, g, r, out);
}

}  // namespace

ModularPartition class_modular_partition(const GraphClass& c, const Graph& g) {
  ModularPartition p;
  p.host_n = g.n();
  if (g.n() == 0) return p;
  partition_rec(c, g, g.vertices(), p.blocks);
  p.normalize();
  return p;
}

GmcResult compute_gmc(const GraphClass& c, const Graph& g) {
  if (!c.trivially_mergeable())
    throw std::invalid_argument("compute_gmc supports edgeless, clique, cluster and cograph, not " + c.name());
  if (g.n() < 1) throw std::invalid_argument("compute_gmc needs at least one vertex");
  GmcResult r;
  r.partition = class_modular_partition(c, g);
  r.cardinality = r.partition.size();
  r.cls = c;
  return r;
}

GmcResult neighborhood_diversity(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("neighborhood diversity needs at least one vertex");
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (find(u) == find(v)) continue;
      VertexSet nu = g.row(u), nv = g.row(v);
      nu.erase(v);
      nv.erase(u);
      if (nu == nv) parent[find(v)] = find(u);
    }
  GmcResult r;
  r.cls = GraphClass(ClassTag::KI);
  r.partition.host_n = g.n();
  std::vector<int> index(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    int root = find(v);
    if (index[root] == -1) {
      index[root] = r.partition.size();
      r.partition.blocks.emplace_back(g.n());
    }
    r.partition.blocks[index[root]].insert(v);
  }
  r.cardinality = r.partition.size();
  return r;
}

int iterated_type_partition(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("iterated type partition needs at least one vertex");
  Graph cur = g;
  while (true) {
    auto nd = neighborhood_diversity(cur);
    if (nd.cardinality == cur.n()) return cur.n();
    cur = quotient_graph(cur, nd.partition);
  }
}

ModularPartition exhaustive_min_partition(const GraphClass& c, const Graph& g, int cap) {
  const int n = g.n();
  if (n > cap || n > 20) throw CapExceeded("exhaustive partition search limited to " + std::to_string(cap) + " vertices");
  ModularPartition p;
  p.host_n = n;
  if (n == 0) return p;
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  std::vector<char> valid(full + 1, 0);
  for (std::uint32_t m = 1; m <= full; ++m) {
    VertexSet s = VertexSet::from_mask(n, m);
    valid[m] = is_module(g, s) && recognize(c, induced_subgraph(g, s).graph);
  }
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(full + 1, inf);
  std::vector<std::uint32_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t low = s & (~s + 1);
    std::uint32_t rest = s ^ low;
    // enumerate blocks that contain the lowest vertex of s
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t block = sub | low;
      if (valid[block] && best[s ^ block] + 1 < best[s]) {
        best[s] = best[s ^ block] + 1;
        choice[s] = block;
      }
      if (sub == 0) break;
    }
  }
  for (std::uint32_t s = full; s; s ^= choice[s]) p.blocks.push_back(VertexSet::from_mask(n, choice[s]));
  p.normalize();
  return p;
}

MwBound check_mw_bound(const GraphClass& c, const Graph& g) {
  MwBound b;
  if (c.is_union() || !(c.trivially_mergeable() || c.is(ClassTag::Stars) || c.is(ClassTag::KI)))
    throw std::invalid_argument("no registered omega constant for class " + c.name());
  b.omega = 0;  // none of the registered classes contains a graph with a prime node
  b.mw = modular_width(g);
  if (c.is(ClassTag::KI))
    b.gmc = neighborhood_diversity(g).cardinality;
  else if (c.is(ClassTag::Stars))
    b.gmc = exhaustive_min_partition(c, g).size();
  else
    b.gmc = compute_gmc(c, g).cardinality;
  b.holds = b.mw <= std::max(b.gmc, b.omega);
  return b;
}

}  // namespace modcard
