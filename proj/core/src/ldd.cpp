#include <stdexcept>

#include "modcard/solvers.hpp"

namespace modcard {

bool LddInstance::degenerate() const {
  return (alpha == Rational(0) && beta <= 0) || (alpha == Rational(1) && beta >= 1);
}

void validate(const LddInstance& inst) {
  if (inst.alpha < Rational(0) || inst.alpha > Rational(1)) throw std::invalid_argument("alpha must lie in [0,1]");
  if (inst.q < 0) throw std::invalid_argument("q must be non-negative");
}

namespace {

// Smallest integer count of X-neighbours that satisfies the constraint at degree d.
long long required(const Rational& alpha, long long beta, long long d) { return ceil_of(alpha * d + Rational(beta)); }

}  // namespace

bool check_ldd(const LddInstance& inst, const VertexSet& x) {
  validate(inst);
  const Graph& g = inst.graph;
  if (x.universe() != g.n()) throw std::invalid_argument("vertex set does not match graph");
  if (x.size() > inst.q) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (x.contains(v)) continue;
    long long hits = 0;
    for (Vertex u : g.neighbors(v)) hits += x.contains(u);
    if (Rational(hits) < inst.alpha * g.degree(v) + Rational(inst.beta)) return false;
  }
  return true;
}

Rational dominating_coefficient(const Graph& g, const VertexSet& x, Vertex v, long long beta) {
  if (x.contains(v)) throw std::invalid_argument("dominating coefficient is defined for vertices outside X");
  if (g.degree(v) == 0) throw std::invalid_argument("dominating coefficient undefined for an isolated vertex");
  long long hits = 0;
  for (Vertex u : g.neighbors(v)) hits += x.contains(u);
  return Rational(hits - beta, g.degree(v));
}

Rational set_dominating_coefficient(const Graph& g, const VertexSet& x, const VertexSet& w, long long beta) {
  Rational best(1);
  bool first = true;
  w.for_each([&](Vertex v) {
    Rational c = dominating_coefficient(g, x, v, beta);
    if (first || c < best) best = c;
    first = false;
  });
  return best;
}

std::optional<VertexSet> brute_force_ldd(const LddInstance& inst, int cap) {
  validate(inst);
  const Graph& g = inst.graph;
  const int n = g.n();
  if (n > cap || n > 30) throw CapExceeded("brute-force LDD limited to " + std::to_string(cap) + " vertices");
  std::vector<std::uint32_t> rows(n, 0);
  std::vector<long long> need(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) rows[v] |= 1U << u;
    need[v] = required(inst.alpha, inst.beta, g.degree(v));
  }
  auto ok = [&](std::uint32_t x) {
    for (int v = 0; v < n; ++v)
      if (!((x >> v) & 1U) && __builtin_popcount(rows[v] & x) < need[v]) return false;
    return true;
  };
  // Subsets of each size in lexicographic order of their sorted member lists.
  std::vector<int> idx;
  const long long top = std::min<long long>(inst.q, n);
  for (int k = 0; k <= top; ++k) {
    idx.resize(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint32_t x = 0;
      for (int i : idx) x |= 1U << i;
      if (ok(x)) return VertexSet::from_mask(n, x);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace modcard
