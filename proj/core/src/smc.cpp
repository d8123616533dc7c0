#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "modcard/gadgets.hpp"

namespace modcard {

std::string SmcInstance::violation() const {
  if (k < 2 || n < 1) return "need k >= 2 colors and n >= 1 vertices per color";
  if (graph.n() != k * n) return "vertex count is not k * n";
  for (auto [u, v] : graph.edges()) {
    if (color_of(u) == color_of(v)) return "edge inside color class " + std::to_string(color_of(u));
    Vertex su = vertex(color_of(u), index_of(v)), sv = vertex(color_of(v), index_of(u));
    if (!graph.adjacent(su, sv))
      return "missing symmetry edge for (" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
  return {};
}

SmcInstance smc_from_graph(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("need k >= 2");
  if (g.n() < k) throw std::invalid_argument("need n >= k");
  SmcInstance s;
  s.k = k;
  s.n = g.n();
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d)
      for (auto [u, v] : g.edges()) {
        e.emplace_back(s.vertex(c, u), s.vertex(d, v));
        e.emplace_back(s.vertex(c, v), s.vertex(d, u));
      }
  s.graph = Graph(k * g.n(), e);
  return s;
}

SmcInstance smc_from_clique(int k, int n, const Rational& density, std::uint64_t seed) {
  if (k < 2 || n < k) throw std::invalid_argument("need n >= k >= 2");
  if (density < 0 || density > 1) throw std::invalid_argument("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coin(0, density.denominator() - 1);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> planted(n, false);
  for (int i = 0; i < k; ++i) planted[order[i]] = true;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool in = coin(rng) < density.numerator();
      if (in || (planted[u] && planted[v])) e.emplace_back(u, v);
    }
  return smc_from_graph(Graph(n, e), k);
}

bool is_multicolored_clique(const SmcInstance& s, const std::vector<int>& pick) {
  if (static_cast<int>(pick.size()) != s.k) return false;
  for (int c = 0; c < s.k; ++c)
    if (pick[c] < 0 || pick[c] >= s.n) return false;
  for (int c = 0; c < s.k; ++c)
    for (int d = c + 1; d < s.k; ++d)
      if (!s.graph.adjacent(s.vertex(c, pick[c]), s.vertex(d, pick[d]))) return false;
  return true;
}

namespace {

bool extend(const SmcInstance& s, std::vector<int>& pick, int color) {
  if (color == s.k) return true;
  for (int i = 0; i < s.n; ++i) {
    bool ok = true;
    for (int c = 0; c < color && ok; ++c) ok = s.graph.adjacent(s.vertex(c, pick[c]), s.vertex(color, i));
    if (!ok) continue;
    pick[color] = i;
    if (extend(s, pick, color + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_multicolored_clique(const SmcInstance& s) {
  std::vector<int> pick(s.k, -1);
  if (extend(s, pick, 0)) return pick;
  return std::nullopt;
}

SmcInstance read_smc(std::istream& in) {
  Graph g = read_edge_list(in);
  std::map<Vertex, int> color;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    long long v, c;
    if (!(ls >> tag >> v >> c) || tag != "c") throw std::invalid_argument("smc: bad color line '" + line + "'");
    if (v < 0 || v >= g.n() || c < 0) throw std::invalid_argument("smc: color line out of range '" + line + "'");
    if (!color.emplace(static_cast<Vertex>(v), static_cast<int>(c)).second)
      throw std::invalid_argument("smc: vertex " + std::to_string(v) + " colored twice");
  }
  if (static_cast<int>(color.size()) != g.n()) throw std::invalid_argument("smc: every vertex needs a color");
  int k = 0;
  for (auto [v, c] : color) k = std::max(k, c + 1);
  std::vector<std::vector<Vertex>> classes(k);
  for (auto [v, c] : color) classes[c].push_back(v);  // ascending ids within each class
  const int n = k ? static_cast<int>(classes[0].size()) : 0;
  for (const auto& cl : classes)
    if (static_cast<int>(cl.size()) != n) throw std::invalid_argument("smc: color classes must have equal size");
  std::vector<Vertex> perm(g.n());
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < n; ++i) perm[classes[c][i]] = c * n + i;
  SmcInstance s;
  s.k = k;
  s.n = n;
  s.graph = relabel(g, perm);
  if (auto v = s.violation(); !v.empty()) throw std::invalid_argument("smc: " + v);
  return s;
}

void write_smc(std::ostream& out, const SmcInstance& s) {
  write_edge_list(out, s.graph);
  for (Vertex v = 0; v < s.graph.n(); ++v) out << "c " << v << ' ' << s.color_of(v) << '\n';
}

}  // namespace modcard
