#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace modcard::testing {

namespace {

bool coin(Rng& rng, int num, int den) { return std::uniform_int_distribution<int>(0, den - 1)(rng) < num; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random composition of n into positive parts.
std::vector<int> random_parts(int n, Rng& rng) {
  std::vector<int> parts;
  while (n > 0) {
    int p = uniform(rng, 1, n);
    parts.push_back(p);
    n -= p;
  }
  return parts;
}

std::vector<std::uint32_t> rows_of(const Graph& g) {
  std::vector<std::uint32_t> rows(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) rows[v] |= 1U << u;
  return rows;
}

bool has_induced(const Graph& g, int k, const std::function<bool(const std::vector<Vertex>&)>& bad) {
  const int n = g.n();
  std::vector<Vertex> pick(k);
  std::function<bool(int, int)> rec = [&](int idx, int from) {
    if (idx == k) {
      std::vector<Vertex> perm = pick;
      do {
        if (bad(perm)) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (int v = from; v < n; ++v) {
      pick[idx] = v;
      if (rec(idx + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool acyclic(const Graph& g) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : g.edges()) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

int max_deg(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Graph induced(const Graph& g, std::uint32_t mask) {
  std::vector<int> id(g.n(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    if ((mask >> v) & 1U) id[v] = next++;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (auto [u, v] : g.edges())
    if (id[u] >= 0 && id[v] >= 0) e.emplace_back(id[u], id[v]);
  return Graph(next, e);
}

}  // namespace

// ------------------------------------------------------------------ generators

Graph random_graph(int n, int num, int den, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, num, den)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_cluster(int n, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  Vertex base = 0;
  for (int size : random_parts(n, rng)) {
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b) e.emplace_back(base + a, base + b);
    base += size;
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph(n, e), perm);
}

Graph random_stars(int n, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  Vertex base = 0;
  for (int size : random_parts(n, rng)) {
    for (int a = 1; a < size; ++a) e.emplace_back(base, base + a);
    base += size;
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph(n, e), perm);
}

Graph random_forest(int n, int max_deg_bound, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<int> deg(n, 0);
  for (Vertex v = 1; v < n; ++v) {
    if (!coin(rng, 4, 5)) continue;  // leave some trees separate
    std::vector<Vertex> open;
    for (Vertex u = 0; u < v; ++u)
      if (deg[u] < max_deg_bound) open.push_back(u);
    if (open.empty()) continue;
    Vertex u = open[uniform(rng, 0, static_cast<int>(open.size()) - 1)];
    e.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(Graph(n, e), perm);
}

Graph random_member(ClassTag tag, int n, Rng& rng) {
  switch (tag) {
    case ClassTag::Edgeless: return edgeless_graph(n);
    case ClassTag::Clique: return complete_graph(n);
    case ClassTag::Cluster: return random_cluster(n, rng);
    case ClassTag::Stars: return random_stars(n, rng);
    case ClassTag::LinearForest: return random_forest(n, 2, rng);
    case ClassTag::BinaryForest: return random_forest(n, 3, rng);
    case ClassTag::BoundedDegForest: return random_forest(n, 3, rng);
    case ClassTag::Cograph: {
      // Random cotree: recursively union or join two smaller cographs.
      std::function<Graph(int)> build = [&](int m) -> Graph {
        if (m == 1) return Graph(1);
        int left = uniform(rng, 1, m - 1);
        Graph a = build(left), b = build(m - left);
        return coin(rng, 1, 2) ? join(a, b) : disjoint_union(a, b);
      };
      return n == 0 ? Graph(0) : build(n);
    }
    case ClassTag::KI: return coin(rng, 1, 2) ? complete_graph(n) : edgeless_graph(n);
  }
  throw std::logic_error("unknown class tag");
}

Graph substitute(const Graph& quotient, const std::vector<Graph>& modules) {
  std::vector<int> offset(modules.size() + 1, 0);
  for (std::size_t i = 0; i < modules.size(); ++i) offset[i + 1] = offset[i] + modules[i].n();
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (auto [u, v] : modules[i].edges()) e.emplace_back(offset[i] + u, offset[i] + v);
  for (auto [a, b] : quotient.edges())
    for (int u = offset[a]; u < offset[a + 1]; ++u)
      for (int v = offset[b]; v < offset[b + 1]; ++v) e.emplace_back(u, v);
  return Graph(offset.back(), e);
}

std::pair<SmcInstance, std::vector<int>> planted_smc(int k, int n, int num, int den, Rng& rng) {
  SmcInstance s;
  s.k = k;
  s.n = n;
  std::vector<int> pick(k);
  for (int& p : pick) p = uniform(rng, 0, n - 1);
  std::set<std::pair<Vertex, Vertex>> edges;
  auto add_pair = [&](int c, int u, int d, int v) {
    // (c,u)-(d,v) together with its index-swapped partner (c,v)-(d,u).
    for (auto [a, b] : {std::pair{s.vertex(c, u), s.vertex(d, v)}, std::pair{s.vertex(c, v), s.vertex(d, u)}})
      edges.insert({std::min(a, b), std::max(a, b)});
  };
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d) {
      add_pair(c, pick[c], d, pick[d]);
      for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
          if (coin(rng, num, den)) add_pair(c, u, d, v);
    }
  s.graph = Graph(k * n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
  return {s, pick};
}

// Canonical code: maximum upper-triangle bit string over all vertex orders that list vertices by
// ascending degree. Isomorphisms preserve degrees, so this set of codes is an isomorphism invariant.
namespace {

std::uint32_t canonical_code(const std::vector<std::uint8_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = __builtin_popcount(rows[v]);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
  std::vector<std::pair<int, int>> groups;  // [begin, end) runs of equal degree
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      std::uint32_t code = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) code = (code << 1) | ((rows[order[a]] >> order[b]) & 1U);
      best = std::max(best, code);
      return;
    }
    auto [lo, hi] = groups[gi];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(gi + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Graph> unlabeled_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("unlabeled_graphs supports 1..7 vertices");
  std::vector<std::vector<std::uint8_t>> level = {{0}};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint32_t> seen;
    std::vector<std::vector<std::uint8_t>> next;
    for (const auto& rows : level)
      for (std::uint32_t s = 0; s < (1U << (size - 1)); ++s) {
        std::vector<std::uint8_t> ext = rows;
        ext.push_back(static_cast<std::uint8_t>(s));
        for (int v = 0; v < size - 1; ++v)
          if ((s >> v) & 1U) ext[v] |= static_cast<std::uint8_t>(1U << (size - 1));
        if (seen.insert(canonical_code(ext)).second) next.push_back(std::move(ext));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& rows : level) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((rows[u] >> v) & 1U) e.emplace_back(u, v);
    out.emplace_back(n, e);
  }
  return out;
}

// -------------------------------------------------------------------- oracles

bool oracle_in_class(ClassTag tag, const Graph& g) {
  const long long n = g.n();
  auto adj = [&](Vertex a, Vertex b) { return g.adjacent(a, b); };
  auto p3 = [&](const std::vector<Vertex>& p) { return adj(p[0], p[1]) && adj(p[1], p[2]) && !adj(p[0], p[2]); };
  auto p4 = [&](const std::vector<Vertex>& p) {
    return adj(p[0], p[1]) && adj(p[1], p[2]) && adj(p[2], p[3]) && !adj(p[0], p[2]) && !adj(p[1], p[3]) &&
           !adj(p[0], p[3]);
  };
  switch (tag) {
    case ClassTag::Edgeless: return g.m() == 0;
    case ClassTag::Clique: return g.m() == n * (n - 1) / 2;
    case ClassTag::Cluster: return !has_induced(g, 3, p3);
    case ClassTag::Cograph: return !has_induced(g, 4, p4);
    case ClassTag::Stars: {
      // Forest whose every edge has an endpoint of degree one.
      if (!acyclic(g)) return false;
      for (auto [u, v] : g.edges())
        if (g.degree(u) > 1 && g.degree(v) > 1) return false;
      return true;
    }
    case ClassTag::LinearForest: return acyclic(g) && max_deg(g) <= 2;
    case ClassTag::BinaryForest:
    case ClassTag::BoundedDegForest: return acyclic(g) && max_deg(g) <= 3;
    case ClassTag::KI: return oracle_in_class(ClassTag::Edgeless, g) || oracle_in_class(ClassTag::Clique, g);
  }
  return false;
}

bool oracle_is_module(const Graph& g, std::uint32_t mask) {
  auto rows = rows_of(g);
  for (Vertex v = 0; v < g.n(); ++v) {
    if ((mask >> v) & 1U) continue;
    std::uint32_t seen = rows[v] & mask;
    if (seen != 0 && seen != mask) return false;
  }
  return true;
}

std::vector<std::uint32_t> oracle_strong_modules(const Graph& g) {
  const int n = g.n();
  if (n > 12) throw std::invalid_argument("oracle_strong_modules supports n <= 12");
  std::vector<std::uint32_t> modules;
  for (std::uint32_t m = 1; m < (1U << n); ++m)
    if (oracle_is_module(g, m)) modules.push_back(m);
  std::vector<std::uint32_t> strong;
  for (std::uint32_t m : modules) {
    bool ok = true;
    for (std::uint32_t o : modules) {
      bool overlap = (m & o) && (m & ~o) && (o & ~m);
      if (overlap) {
        ok = false;
        break;
      }
    }
    if (ok) strong.push_back(m);
  }
  return strong;
}

int oracle_modular_width(const Graph& g) {
  // Each strong module with at least two vertices is a tree node whose children are the maximal strong
  // modules strictly inside it; it is prime when neither it nor its complement is disconnected.
  auto strong = oracle_strong_modules(g);
  int mw = 0;
  for (std::uint32_t m : strong) {
    if (__builtin_popcount(m) < 2) continue;
    std::vector<std::uint32_t> kids;
    for (std::uint32_t c : strong) {
      if (c == m || (c & ~m)) continue;
      bool maximal = true;
      for (std::uint32_t o : strong)
        if (o != m && o != c && (o & ~m) == 0 && (c & ~o) == 0) maximal = false;
      if (maximal) kids.push_back(c);
    }
    Graph sub = induced(g, m);
    bool parallel = !is_connected(sub);
    bool series = !is_connected(complement(sub));
    if (!parallel && !series) mw = std::max(mw, static_cast<int>(kids.size()));
  }
  return mw;
}

int oracle_min_class_partition(ClassTag tag, const Graph& g) {
  const int n = g.n();
  if (n > 10) throw std::invalid_argument("oracle_min_class_partition supports n <= 10");
  if (n == 0) return 0;
  std::vector<char> good(1U << n, 0);
  for (std::uint32_t m = 1; m < (1U << n); ++m) good[m] = oracle_is_module(g, m) && oracle_in_class(tag, induced(g, m));
  // Set partitions: each block contains the smallest uncovered vertex.
  std::vector<int> best(1U << n, n + 1);
  best[0] = 0;
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t covered = 0; covered < all; ++covered) {
    if (best[covered] > n) continue;
    std::uint32_t rest = all & ~covered;
    std::uint32_t low = rest & (~rest + 1);
    std::uint32_t others = rest & ~low;
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      std::uint32_t block = sub | low;
      if (good[block]) best[covered | block] = std::min(best[covered | block], best[covered] + 1);
      if (sub == 0) break;
    }
  }
  return best[all];
}

std::vector<int> oracle_deletion_table(const Graph& g) {
  const int n = g.n();
  if (n > 20) throw std::invalid_argument("oracle_deletion_table supports n <= 20");
  auto rows = rows_of(g);
  std::vector<int> f(n + 1, n);
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    int d = 0;
    for (int v = 0; v < n; ++v)
      if (!((x >> v) & 1U)) d = std::max(d, __builtin_popcount(rows[v] & ~x));
    int s = __builtin_popcount(x);
    f[s] = std::min(f[s], d);
  }
  return f;
}

std::vector<int> oracle_retention_table(const Graph& g) {
  const int n = g.n();
  if (n > 20 || n < 1) throw std::invalid_argument("oracle_retention_table supports 1 <= n <= 20");
  auto rows = rows_of(g);
  std::vector<int> f(n, 0);
  for (std::uint32_t x = 0; x + 1 < (1U << n); ++x) {
    int d = n;
    for (int v = 0; v < n; ++v)
      if (!((x >> v) & 1U)) d = std::min(d, __builtin_popcount(rows[v] & x));
    int s = __builtin_popcount(x);
    f[s] = std::max(f[s], d);
  }
  return f;
}

}  // namespace modcard::testing
