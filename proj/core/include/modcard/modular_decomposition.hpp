#pragma once

#include <string>
#include <vector>

#include "modcard/graph.hpp"

namespace modcard {

// Disjoint blocks covering the vertices of a host graph, ordered by minimum vertex.
struct ModularPartition {
  int host_n = 0;
  std::vector<VertexSet> blocks;

  int size() const { return static_cast<int>(blocks.size()); }
  void normalize();  // sorts blocks by minimum vertex
  // Index of the block holding each vertex.
  std::vector<int> block_of() const;
  bool operator==(const ModularPartition& o) const = default;
};

bool is_module(const Graph& g, const VertexSet& m);
// True when the blocks are disjoint, cover V and are all modules.
bool is_modular_partition(const Graph& g, const ModularPartition& p);

// Smallest module containing the given seed set.
VertexSet module_closure(const Graph& g, const VertexSet& seed);

ModularPartition maximal_modular_partition(const Graph& g);

enum class NodeKind { Leaf, Parallel, Series, Prime };
std::string to_string(NodeKind k);

struct MDNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<Vertex> vertices;  // ascending host ids
  std::vector<int> children;     // node indices, ordered by minimum vertex
};

struct MDTree {
  std::vector<MDNode> nodes;  // nodes[0] is the root
  const MDNode& root() const { return nodes.front(); }
};

MDTree md_tree(const Graph& g);
int modular_width(const MDTree& t);
int modular_width(const Graph& g);

// One vertex per block, adjacent iff the blocks are adjacent.
Graph quotient_graph(const Graph& g, const ModularPartition& p);

}  // namespace modcard
