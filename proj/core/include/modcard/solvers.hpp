#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "modcard/graph.hpp"
#include "modcard/graph_classes.hpp"
#include "modcard/rational.hpp"
#include "modcard/tables.hpp"

namespace modcard {

// (alpha, beta)-linear degree domination: find X, |X| <= q, with |N(v) ∩ X| >= alpha |N(v)| + beta for v outside X.
struct LddInstance {
  Graph graph;
  Rational alpha{0};
  long long beta = 0;
  long long q = 0;

  // alpha = 0 with beta <= 0 is always yes; alpha = 1 with beta >= 1 is only solved by X = V.
  bool degenerate() const;
};

void validate(const LddInstance& inst);
bool check_ldd(const LddInstance& inst, const VertexSet& x);
// (|N(v) ∩ X| - beta) / |N(v)| for a vertex v outside X with at least one neighbour.
Rational dominating_coefficient(const Graph& g, const VertexSet& x, Vertex v, long long beta);
// Minimum over the vertices of w (1 for an empty set).
Rational set_dominating_coefficient(const Graph& g, const VertexSet& x, const VertexSet& w, long long beta);
// Lexicographically least minimum-size solution of size at most q, or none.
std::optional<VertexSet> brute_force_ldd(const LddInstance& inst, int cap = 20);

// ------------------------------------------------------------ integer feasibility

enum class Relation { LessEq, GreaterEq };

struct LinearTerm {
  int var = 0;
  Rational coeff{1};
};

struct PiecewiseTerm {
  int var = 0;
  Rational coeff{1};
  std::shared_ptr<const PiecewiseLinearFn> fn;
};

struct Constraint {
  std::vector<LinearTerm> linear;
  std::vector<PiecewiseTerm> piecewise;
  Relation rel = Relation::LessEq;
  Rational rhs{0};
};

struct IntFeasibilityProblem {
  std::vector<std::pair<long long, long long>> bounds;  // inclusive [lo, hi] per variable
  std::vector<Constraint> constraints;

  int add_var(long long lo, long long hi) {
    bounds.emplace_back(lo, hi);
    return static_cast<int>(bounds.size()) - 1;
  }
};

struct FeasibilityStats {
  long long nodes = 0;
};

// Exact depth-first search with interval pruning; complete because every domain is finite.
std::optional<std::vector<long long>> int_feasible(const IntFeasibilityProblem& p, FeasibilityStats* stats = nullptr);
// Left-hand side of a constraint under a full assignment.
Rational evaluate_lhs(const Constraint& c, const std::vector<long long>& x);
bool satisfies(const IntFeasibilityProblem& p, const std::vector<long long>& x);

// ---------------------------------------------------------------------- solvers

struct SolveResult {
  std::optional<VertexSet> witness;
  long long branches_explored = 0;
  bool feasible() const { return witness.has_value(); }
};

// How cluster modules enter the bounded-degree-deletion program.
enum class ClusterTableForm {
  RelaxedConvex,   // g(x) without the ceiling (valid because the rest of the constraint is integral)
  Ceiling,         // ceil(g(x))
  StepCompressed,  // exact step table compressed into horizontal runs, with segment branching
};

struct BddOptions {
  ClusterTableForm cluster_form = ClusterTableForm::RelaxedConvex;
  TableCaps caps;
};

// Bounded Degree Deletion (alpha = 1, beta <= 0): |X| <= q and max degree of G - X at most -beta.
SolveResult solve_bdd_gmc(const Graph& g, long long q, long long beta, const GraphClass& cls,
                          const BddOptions& opts = {});

struct NdOptions {
  int nd_cap = 12;
};

// (alpha, beta)-LDD through the twin-class integer program.
SolveResult solve_ldd_nd(const LddInstance& inst, const NdOptions& opts = {});

}  // namespace modcard
