#include "modcard/tables.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "modcard/graph_classes.hpp"

namespace modcard {

bool StepTable::is_monotone() const {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (kind == TableKind::Deletion && values[i] > values[i - 1]) return false;
    if (kind == TableKind::Retention && values[i] < values[i - 1]) return false;
  }
  return true;
}

int StepTable::distinct_values() const { return static_cast<int>(std::set<int>(values.begin(), values.end()).size()); }

namespace {

std::vector<std::uint32_t> row_masks(const Graph& g) {
  std::vector<std::uint32_t> rows(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u : g.neighbors(v)) rows[v] |= 1U << u;
  return rows;
}

int residual_max_degree(const std::vector<std::uint32_t>& rows, std::uint32_t x) {
  int d = 0;
  for (std::size_t v = 0; v < rows.size(); ++v)
    if (!((x >> v) & 1U)) d = std::max(d, __builtin_popcount(rows[v] & ~x));
  return d;
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap || g.n() > 30)
    throw CapExceeded(std::string(what) + " brute force limited to " + std::to_string(std::min(cap, 30)) +
                      " vertices, graph has " + std::to_string(g.n()));
}

}  // namespace

StepTable deletion_table_bruteforce(const Graph& g, int cap) {
  check_cap(g, cap, "deletion table");
  const int n = g.n();
  auto rows = row_masks(g);
  StepTable t;
  t.kind = TableKind::Deletion;
  t.host_size = n;
  t.values.assign(n + 1, std::numeric_limits<int>::max());
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t x = 0;; ++x) {
    int k = __builtin_popcount(x);
    t.values[k] = std::min(t.values[k], residual_max_degree(rows, x));
    if (x == full) break;
  }
  return t;
}

StepTable retention_table(const Graph& g, const TableCaps& caps) {
  check_cap(g, caps.retention, "retention table");
  const int n = g.n();
  auto rows = row_masks(g);
  StepTable t;
  t.kind = TableKind::Retention;
  t.host_size = n;
  t.values.assign(n, 0);
  if (n == 0) return t;
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t x = 0; x < full; ++x) {
    int k = __builtin_popcount(x);
    int worst = n;
    for (int v = 0; v < n && worst > t.values[k]; ++v)
      if (!((x >> v) & 1U)) worst = std::min(worst, __builtin_popcount(rows[v] & x));
    t.values[k] = std::max(t.values[k], worst);
  }
  return t;
}

// ------------------------------------------------------------------ cluster

namespace {

struct CliqueShape {
  std::vector<long long> a;  // distinct degrees a_1 > ... > a_r > a_{r+1} = 0
  std::vector<long long> b;  // multiplicities (b_{r+1} counts isolated vertices)
};

CliqueShape clique_shape(const Graph& g) {
  std::map<long long, long long, std::greater<>> count;
  for (const auto& c : connected_components(g)) ++count[c.size() - 1];
  CliqueShape s;
  for (auto [deg, mult] : count)
    if (deg > 0) {
      s.a.push_back(deg);
      s.b.push_back(mult);
    }
  s.a.push_back(0);
  s.b.push_back(count.count(0) ? count[0] : 0);
  return s;
}

}  // namespace

PiecewiseLinearFn cluster_piecewise(const Graph& g) {
  if (!is_cluster(g)) throw std::invalid_argument("cluster_piecewise expects a cluster graph");
  auto shape = clique_shape(g);
  PiecewiseLinearFn f;
  f.mode = EvalMode::Ceiling;
  const std::size_t len = shape.a.size();
  for (std::size_t i = 0; i < len; ++i) {
    long long x = 0;
    for (std::size_t j = 0; j <= i; ++j) x += (shape.a[j] - shape.a[i]) * shape.b[j];
    f.breakpoints.push_back({Rational(x), Rational(shape.a[i])});
  }
  f.left_slope = Rational(-static_cast<long long>(g.n()));
  f.right_slope = Rational(0);
  f.convex = f.check_convex();
  return f;
}

StrippedCluster strip_max_cliques(const Graph& g) {
  if (!is_cluster(g)) throw std::invalid_argument("strip_max_cliques expects a cluster graph");
  auto comps = connected_components(g);
  int biggest = 0;
  for (const auto& c : comps) biggest = std::max(biggest, c.size());
  VertexSet keep = g.vertices();
  StrippedCluster r;
  for (const auto& c : comps)
    if (c.size() == biggest) {
      keep.erase(c.min());
      ++r.count;
    }
  auto sub = induced_subgraph(g, keep);
  r.residual = std::move(sub.graph);
  r.to_host = std::move(sub.to_host);
  return r;
}

VertexSet cluster_deletion_set(const Graph& g, int x) {
  if (!is_cluster(g)) throw std::invalid_argument("cluster deletion set expects a cluster graph");
  if (x < 0 || x > g.n()) throw std::out_of_range("deletion count outside [0, n]");
  // Repeatedly delete from a largest surviving clique (ties: smallest minimum vertex).
  auto comps = connected_components(g);
  std::vector<std::vector<Vertex>> rest;
  for (const auto& c : comps) rest.push_back(c.members());
  VertexSet out(g.n());
  for (int k = 0; k < x; ++k) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (rest[i].size() > rest[pick].size()) pick = i;
    out.insert(rest[pick].front());
    rest[pick].erase(rest[pick].begin());
  }
  return out;
}

// -------------------------------------------------------------------- stars

namespace {

struct StarInfo {
  Vertex center;
  int leaves;
};

std::vector<StarInfo> stars_of(const Graph& g) {
  std::vector<StarInfo> out;
  for (const auto& c : connected_components(g)) {
    Vertex center = c.min();
    c.for_each([&](Vertex v) {
      if (g.degree(v) > g.degree(center)) center = v;
    });
    out.push_back({center, c.size() - 1});
  }
  std::stable_sort(out.begin(), out.end(), [](const StarInfo& a, const StarInfo& b) { return a.leaves > b.leaves; });
  return out;
}

}  // namespace

StepTable stars_deletion_table(const Graph& g) {
  if (!is_stars(g)) throw std::invalid_argument("stars_deletion_table expects a disjoint union of stars");
  auto stars = stars_of(g);
  StepTable t;
  t.kind = TableKind::Deletion;
  t.host_size = g.n();
  for (int x = 0; x <= g.n(); ++x) t.values.push_back(x < static_cast<int>(stars.size()) ? stars[x].leaves : 0);
  return t;
}

namespace {

VertexSet pad_lowest(VertexSet s, int x) {
  for (Vertex v = 0; v < s.universe() && s.size() < x; ++v) s.insert(v);
  return s;
}

}  // namespace

VertexSet stars_deletion_set(const Graph& g, int x) {
  if (!is_stars(g)) throw std::invalid_argument("stars deletion set expects a disjoint union of stars");
  if (x < 0 || x > g.n()) throw std::out_of_range("deletion count outside [0, n]");
  auto stars = stars_of(g);
  VertexSet out(g.n());
  for (int i = 0; i < x && i < static_cast<int>(stars.size()); ++i) out.insert(stars[i].center);
  return pad_lowest(out, x);
}

// ------------------------------------------------------------------- forest

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Rooted traversal order of every tree in the forest (parents before children).
struct RootedForest {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

RootedForest root_forest(const Graph& g) {
  RootedForest f;
  f.parent.assign(g.n(), -2);
  for (Vertex r = 0; r < g.n(); ++r) {
    if (f.parent[r] != -2) continue;
    f.parent[r] = -1;
    std::size_t head = f.order.size();
    f.order.push_back(r);
    while (head < f.order.size()) {
      Vertex v = f.order[head++];
      for (Vertex u : g.neighbors(v))
        if (f.parent[u] == -2) {
          f.parent[u] = v;
          f.order.push_back(u);
        }
    }
  }
  return f;
}

struct ForestDp {
  std::vector<long long> del, keep_free, keep_tied;  // parent deleted/absent vs parent kept
};

// Minimum deletions so that every surviving vertex keeps at most t surviving neighbours.
ForestDp forest_dp(const Graph& g, const RootedForest& f, int t) {
  ForestDp dp;
  dp.del.assign(g.n(), 0);
  dp.keep_free.assign(g.n(), 0);
  dp.keep_tied.assign(g.n(), 0);
  std::vector<long long> gains;
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    Vertex v = *it;
    long long del = 1, base = 0;
    gains.clear();
    for (Vertex c : g.neighbors(v)) {
      if (f.parent[c] != v) continue;
      del += std::min(dp.del[c], dp.keep_free[c]);
      base += dp.del[c];
      if (dp.keep_tied[c] < dp.del[c]) gains.push_back(dp.del[c] - dp.keep_tied[c]);
    }
    std::sort(gains.begin(), gains.end(), std::greater<>());
    auto with_budget = [&](int budget) {
      if (budget < 0) return kInf;
      long long cost = base;
      for (int i = 0; i < budget && i < static_cast<int>(gains.size()); ++i) cost -= gains[i];
      return cost;
    };
    dp.del[v] = del;
    dp.keep_free[v] = with_budget(t);
    dp.keep_tied[v] = with_budget(t - 1);
  }
  return dp;
}

}  // namespace

std::vector<int> forest_deletion_costs(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("forest deletion table expects a forest");
  auto f = root_forest(g);
  std::vector<int> cost;
  for (int t = 0; t <= max_degree(g); ++t) {
    auto dp = forest_dp(g, f, t);
    long long total = 0;
    for (Vertex v = 0; v < g.n(); ++v)
      if (f.parent[v] == -1) total += std::min(dp.del[v], dp.keep_free[v]);
    cost.push_back(static_cast<int>(total));
  }
  return cost;
}

StepTable forest_deletion_table(const Graph& g) {
  auto cost = forest_deletion_costs(g);
  StepTable t;
  t.kind = TableKind::Deletion;
  t.host_size = g.n();
  for (int x = 0; x <= g.n(); ++x) {
    int best = 0;
    while (cost[best] > x) ++best;
    t.values.push_back(best);
  }
  return t;
}

VertexSet forest_deletion_set(const Graph& g, int x) {
  if (x < 0 || x > g.n()) throw std::out_of_range("deletion count outside [0, n]");
  auto cost = forest_deletion_costs(g);
  int t = 0;
  while (cost[t] > x) ++t;
  auto f = root_forest(g);
  auto dp = forest_dp(g, f, t);
  // Replays the optimal choices top-down: state 0 = parent deleted/absent, 1 = kept under a kept parent,
  // -1 = deleted by the parent's choice.
  std::vector<int> state(g.n(), 0);
  VertexSet out(g.n());
  for (Vertex v : f.order) {
    bool deleted = state[v] == -1 || (state[v] == 0 && dp.del[v] <= dp.keep_free[v]);
    if (deleted) {
      out.insert(v);
      for (Vertex c : g.neighbors(v))
        if (f.parent[c] == v) state[c] = 0;
      continue;
    }
    int budget = state[v] == 0 ? t : t - 1;
    std::vector<std::pair<long long, Vertex>> gains;
    for (Vertex c : g.neighbors(v)) {
      if (f.parent[c] != v) continue;
      if (dp.keep_tied[c] < dp.del[c]) gains.emplace_back(dp.del[c] - dp.keep_tied[c], c);
    }
    std::stable_sort(gains.begin(), gains.end(), [](auto& a, auto& b) { return a.first > b.first; });
    std::vector<Vertex> kept;
    for (int i = 0; i < budget && i < static_cast<int>(gains.size()); ++i) kept.push_back(gains[i].second);
    for (Vertex c : g.neighbors(v)) {
      if (f.parent[c] != v) continue;
      state[c] = std::find(kept.begin(), kept.end(), c) != kept.end() ? 1 : -1;
    }
  }
  return pad_lowest(out, x);
}

// -------------------------------------------------------------- brute force

VertexSet bruteforce_deletion_set(const Graph& g, int x, int cap) {
  check_cap(g, cap, "deletion set");
  if (x < 0 || x > g.n()) throw std::out_of_range("deletion count outside [0, n]");
  auto table = deletion_table_bruteforce(g, cap);
  auto rows = row_masks(g);
  const std::uint32_t full = (1U << g.n()) - 1;
  for (std::uint32_t m = 0;; ++m) {
    if (__builtin_popcount(m) == x && residual_max_degree(rows, m) == table.values[x])
      return VertexSet::from_mask(g.n(), m);
    if (m == full) break;
  }
  throw std::logic_error("no deletion set attains the table value");
}

StepTable deletion_table(const Graph& g, const TableCaps& caps) {
  if (is_stars(g)) return stars_deletion_table(g);
  if (is_cluster(g)) return table_from_piecewise(cluster_piecewise(g), g.n());
  if (is_forest(g)) return forest_deletion_table(g);
  return deletion_table_bruteforce(g, caps.deletion);
}

VertexSet deletion_set(const Graph& g, int x, const TableCaps& caps) {
  if (is_stars(g)) return stars_deletion_set(g, x);
  if (is_cluster(g)) return cluster_deletion_set(g, x);
  if (is_forest(g)) return forest_deletion_set(g, x);
  return bruteforce_deletion_set(g, x, caps.deletion);
}

}  // namespace modcard
