#include "modcard/graph_classes.hpp"

#include <sstream>
#include <stdexcept>

namespace modcard {

GraphClass::GraphClass(ClassTag tag) {
  if (tag == ClassTag::BoundedDegForest) throw std::invalid_argument("use bounded_deg_forest(d)");
  atoms_.push_back({tag, 0});
}

GraphClass GraphClass::bounded_deg_forest(int d) {
  if (d < 1) throw std::invalid_argument("bounded-degree forest needs d >= 1");
  GraphClass c;
  c.atoms_.push_back({ClassTag::BoundedDegForest, d});
  return c;
}

GraphClass GraphClass::union_of(const std::vector<GraphClass>& parts) {
  GraphClass c;
  for (const auto& p : parts)
    for (const auto& a : p.atoms_) {
      bool dup = false;
      for (const auto& b : c.atoms_) dup = dup || b == a;
      if (!dup) c.atoms_.push_back(a);
    }
  if (c.atoms_.empty()) throw std::invalid_argument("empty class union");
  return c;
}

bool GraphClass::trivially_mergeable() const {
  return is(ClassTag::Edgeless) || is(ClassTag::Clique) || is(ClassTag::Cluster) || is(ClassTag::Cograph);
}

namespace {

std::string atom_name(const ClassAtom& a) {
  switch (a.tag) {
    case ClassTag::Edgeless: return "edgeless";
    case ClassTag::Clique: return "clique";
    case ClassTag::Cluster: return "cluster";
    case ClassTag::Stars: return "stars";
    case ClassTag::Cograph: return "cograph";
    case ClassTag::LinearForest: return "linear-forest";
    case ClassTag::BinaryForest: return "binary-forest";
    case ClassTag::BoundedDegForest: return "bounded-deg-forest:" + std::to_string(a.degree_bound);
    case ClassTag::KI: return "ki";
  }
  return "?";
}

GraphClass parse_atom(const std::string& s) {
  if (s == "edgeless") return GraphClass(ClassTag::Edgeless);
  if (s == "clique") return GraphClass(ClassTag::Clique);
  if (s == "cluster") return GraphClass(ClassTag::Cluster);
  if (s == "stars") return GraphClass(ClassTag::Stars);
  if (s == "cograph") return GraphClass(ClassTag::Cograph);
  if (s == "linear-forest") return GraphClass(ClassTag::LinearForest);
  if (s == "binary-forest") return GraphClass(ClassTag::BinaryForest);
  if (s == "ki") return GraphClass(ClassTag::KI);
  const std::string prefix = "bounded-deg-forest:";
  if (s.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    int d = std::stoi(s.substr(prefix.size()), &used);
    if (used != s.size() - prefix.size()) throw std::invalid_argument("bad degree bound in '" + s + "'");
    return GraphClass::bounded_deg_forest(d);
  }
  throw std::invalid_argument("unknown graph class '" + s + "'");
}

}  // namespace

std::string GraphClass::name() const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) out += (i ? "+" : "") + atom_name(atoms_[i]);
  return out;
}

GraphClass parse_graph_class(const std::string& s) {
  std::vector<GraphClass> parts;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, '+')) parts.push_back(parse_atom(piece));
  if (parts.empty()) throw std::invalid_argument("empty class name");
  return parts.size() == 1 ? parts[0] : GraphClass::union_of(parts);
}

bool is_forest(const Graph& g) {
  return g.m() == g.n() - static_cast<long long>(connected_components(g).size());
}

bool is_cluster(const Graph& g) {
  for (const auto& c : connected_components(g)) {
    long long k = c.size();
    long long e = 0;
    c.for_each([&](Vertex v) { e += g.degree(v); });
    if (e != k * (k - 1)) return false;  // every vertex of the component sees the whole component
  }
  return true;
}

bool is_stars(const Graph& g) {
  for (const auto& c : connected_components(g)) {
    int k = c.size();
    if (k <= 2) continue;
    long long e = 0;
    bool has_center = false;
    c.for_each([&](Vertex v) {
      e += g.degree(v);
      has_center = has_center || g.degree(v) == k - 1;
    });
    if (e != 2LL * (k - 1) || !has_center) return false;
  }
  return true;
}

bool is_cograph(const Graph& g) {
  if (g.n() <= 1) return true;
  auto parts = connected_components(g);
  if (parts.size() == 1) {
    parts = connected_components(complement(g));
    if (parts.size() == 1) return false;  // both connected: prime at the top
  }
  for (const auto& p : parts)
    if (!is_cograph(induced_subgraph(g, p).graph)) return false;
  return true;
}

bool recognize(ClassTag tag, const Graph& g) {
  long long n = g.n();
  switch (tag) {
    case ClassTag::Edgeless: return g.m() == 0;
    case ClassTag::Clique: return g.m() == n * (n - 1) / 2;
    case ClassTag::KI: return g.m() == 0 || g.m() == n * (n - 1) / 2;
    case ClassTag::Cluster: return is_cluster(g);
    case ClassTag::Stars: return is_stars(g);
    case ClassTag::Cograph: return is_cograph(g);
    case ClassTag::LinearForest: return max_degree(g) <= 2 && is_forest(g);
    case ClassTag::BinaryForest: return max_degree(g) <= 3 && is_forest(g);
    case ClassTag::BoundedDegForest: throw std::invalid_argument("bounded-degree forest needs its bound");
  }
  return false;
}

bool recognize(const GraphClass& c, const Graph& g) {
  for (const auto& a : c.atoms()) {
    if (a.tag == ClassTag::BoundedDegForest) {
      if (max_degree(g) <= a.degree_bound && is_forest(g)) return true;
    } else if (recognize(a.tag, g)) {
      return true;
    }
  }
  return false;
}

ModularPartition g_merge(const GraphClass& c, const Graph& g) {
  if (!c.trivially_mergeable()) throw std::invalid_argument("no merge procedure for class " + c.name());
  ModularPartition p;
  p.host_n = g.n();
  auto all_in_class = [&](const std::vector<VertexSet>& parts) {
    for (const auto& s : parts)
      if (!recognize(c, induced_subgraph(g, s).graph)) return false;
    return true;
  };
  auto cc = connected_components(g);
  bool is_union = g.n() >= 2 && cc.size() > 1 && all_in_class(cc);
  std::vector<VertexSet> co;
  bool is_join = false;
  if (!is_union && g.n() >= 2 && cc.size() == 1) {
    co = connected_components(complement(g));
    is_join = co.size() > 1 && all_in_class(co);
  }
  if (!is_union && !is_join) throw std::invalid_argument("graph is neither a union nor a join of members of " + c.name());

  const ClassTag tag = c.atoms()[0].tag;
  if (tag == ClassTag::Cograph || (tag == ClassTag::Clique && is_join) || (tag == ClassTag::Edgeless && is_union) ||
      (tag == ClassTag::Cluster && is_union)) {
    p.blocks.push_back(g.vertices());
  } else if (tag == ClassTag::Clique) {
    p.blocks = cc;
  } else if (tag == ClassTag::Edgeless) {
    p.blocks = co;
  } else {
    // Cluster join: a co-component inducing a single clique is a single vertex, and any set of those
    // induces a clique; co-components with two or more cliques must stay apart.
    VertexSet singles(g.n());
    for (const auto& s : co) {
      if (s.size() == 1)
        singles |= s;
      else
        p.blocks.push_back(s);
    }
    if (!singles.empty()) p.blocks.push_back(singles);
  }
  p.normalize();
  return p;
}

}  // namespace modcard
