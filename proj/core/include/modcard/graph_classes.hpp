#pragma once

#include <string>
#include <vector>

#include "modcard/graph.hpp"
#include "modcard/modular_decomposition.hpp"

namespace modcard {

enum class ClassTag { Edgeless, Clique, Cluster, Stars, Cograph, LinearForest, BinaryForest, BoundedDegForest, KI };

struct ClassAtom {
  ClassTag tag = ClassTag::Edgeless;
  int degree_bound = 0;  // only meaningful for BoundedDegForest
  bool operator==(const ClassAtom&) const = default;
};

// A graph class, or a union of classes when more than one atom is present.
class GraphClass {
 public:
  GraphClass() = default;
  explicit GraphClass(ClassTag tag);
  static GraphClass bounded_deg_forest(int d);
  static GraphClass union_of(const std::vector<GraphClass>& parts);

  const std::vector<ClassAtom>& atoms() const { return atoms_; }
  bool is_union() const { return atoms_.size() > 1; }
  bool is(ClassTag tag) const { return atoms_.size() == 1 && atoms_[0].tag == tag; }
  // Edgeless, Clique, Cluster or Cograph: the classes with a minimum merge procedure.
  bool trivially_mergeable() const;
  std::string name() const;
  bool operator==(const GraphClass&) const = default;

 private:
  std::vector<ClassAtom> atoms_;
};

// Accepts edgeless|clique|cluster|stars|cograph|linear-forest|binary-forest|ki, bounded-deg-forest:<d>,
// and '+'-separated unions of those.
GraphClass parse_graph_class(const std::string& s);

bool recognize(const GraphClass& c, const Graph& g);
bool recognize(ClassTag tag, const Graph& g);
bool is_cograph(const Graph& g);
bool is_forest(const Graph& g);
bool is_cluster(const Graph& g);
bool is_stars(const Graph& g);

// Minimum merge of a union or join of class members (trivially mergeable classes only).
ModularPartition g_merge(const GraphClass& c, const Graph& g);

}  // namespace modcard
