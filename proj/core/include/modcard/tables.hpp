#pragma once

#include <vector>

#include "modcard/graph.hpp"
#include "modcard/rational.hpp"

namespace modcard {

enum class TableKind { Deletion, Retention };

// Integer step function: f(0..n) for deletion, f(0..n-1) for retention.
struct StepTable {
  TableKind kind = TableKind::Deletion;
  int host_size = 0;
  std::vector<int> values;

  int at(int x) const { return values.at(x); }
  bool is_monotone() const;  // non-increasing for deletion, non-decreasing for retention
  int distinct_values() const;
  bool operator==(const StepTable&) const = default;
};

enum class EvalMode { Exact, Ceiling };

struct Breakpoint {
  Rational x, y;
  bool operator==(const Breakpoint&) const = default;
};

// Continuous piecewise-linear function through the breakpoints, extended linearly with the given slopes.
class PiecewiseLinearFn {
 public:
  std::vector<Breakpoint> breakpoints;  // strictly increasing x
  Rational left_slope{0}, right_slope{0};
  EvalMode mode = EvalMode::Exact;
  bool convex = false;

  Rational raw(const Rational& x) const;
  // raw() in exact mode, its ceiling in ceiling mode.
  Rational value(const Rational& x) const;
  long long at(long long x) const;  // value at an integer, which must be integral
  // Number of bounded segments (a lone breakpoint counts as one degenerate segment).
  int segment_count() const;
  // Integer sub-domain [lo, hi] of segment s (closed), clipped to [dom_lo, dom_hi]; empty when lo > hi.
  std::pair<long long, long long> segment_domain(int s, long long dom_lo, long long dom_hi) const;
  bool check_convex() const;  // slopes non-decreasing, extensions included
  bool operator==(const PiecewiseLinearFn&) const = default;
};

struct TableCaps {
  int deletion = 18;
  int retention = 16;
};

// Exhaustive tables over all vertex subsets.
StepTable deletion_table_bruteforce(const Graph& g, int cap = 18);
StepTable retention_table(const Graph& g, const TableCaps& caps = {});
// Dispatches to the stars, cluster or forest closed forms when they apply, else brute force.
StepTable deletion_table(const Graph& g, const TableCaps& caps = {});

PiecewiseLinearFn cluster_piecewise(const Graph& g);
StepTable stars_deletion_table(const Graph& g);
StepTable forest_deletion_table(const Graph& g);
// Minimum deletions needed for maximum degree at most t, for every t in [0, max degree].
std::vector<int> forest_deletion_costs(const Graph& g);
StepTable table_from_piecewise(const PiecewiseLinearFn& f, int n);
PiecewiseLinearFn compress_step_table(const StepTable& t);

struct StrippedCluster {
  Graph residual;
  std::vector<Vertex> to_host;  // residual id -> original id
  int count = 0;
};
StrippedCluster strip_max_cliques(const Graph& g);

// An x-vertex set whose deletion attains f(x), built with the same fast paths as deletion_table.
VertexSet deletion_set(const Graph& g, int x, const TableCaps& caps = {});
VertexSet cluster_deletion_set(const Graph& g, int x);
VertexSet stars_deletion_set(const Graph& g, int x);
VertexSet forest_deletion_set(const Graph& g, int x);
VertexSet bruteforce_deletion_set(const Graph& g, int x, int cap = 18);

}  // namespace modcard
