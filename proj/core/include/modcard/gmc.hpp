#pragma once

#include "modcard/graph.hpp"
#include "modcard/graph_classes.hpp"
#include "modcard/modular_decomposition.hpp"

namespace modcard {

struct GmcResult {
  ModularPartition partition;
  int cardinality = 0;
  GraphClass cls;
};

// Minimum class-modular partition for the trivially mergeable classes (edgeless, clique, cluster, cograph).
GmcResult compute_gmc(const GraphClass& c, const Graph& g);

// The same recursion for any hereditary class; classes without a minimum merge procedure fall back to
// grouping components greedily, which yields a valid (not necessarily minimum) class-modular partition.
ModularPartition class_modular_partition(const GraphClass& c, const Graph& g);

// Twin classes: the minimum partition into clique or independent modules.
GmcResult neighborhood_diversity(const Graph& g);

// Vertex count of the fixed point of repeated type-graph contraction.
int iterated_type_partition(const Graph& g);

struct MwBound {
  int mw = 0;
  int gmc = 0;
  int omega = 0;
  bool holds = false;
};

// Compares modular-width with max(class-mc, omega) for classes with a registered omega constant.
MwBound check_mw_bound(const GraphClass& c, const Graph& g);

// Exhaustive minimum class-modular partition by dynamic programming over vertex subsets.
ModularPartition exhaustive_min_partition(const GraphClass& c, const Graph& g, int cap = 12);

}  // namespace modcard
