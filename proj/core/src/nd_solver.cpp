#include <stdexcept>

#include "modcard/gmc.hpp"
#include "modcard/modular_decomposition.hpp"
#include "modcard/solvers.hpp"

namespace modcard {

SolveResult solve_ldd_nd(const LddInstance& inst, const NdOptions& opts) {
  validate(inst);
  const Graph& g = inst.graph;
  SolveResult result;
  if (g.n() == 0) {
    result.witness = VertexSet(0);
    return result;
  }
  auto types = neighborhood_diversity(g);
  const int k = types.cardinality;
  if (k > opts.nd_cap)
    throw CapExceeded("neighborhood diversity " + std::to_string(k) + " exceeds cap " + std::to_string(opts.nd_cap));
  Graph quotient = quotient_graph(g, types.partition);
  std::vector<long long> size(k);
  std::vector<bool> clique(k);
  for (int i = 0; i < k; ++i) {
    const auto& b = types.partition.blocks[i];
    size[i] = b.size();
    // Twin classes are cliques or independent sets; a singleton is treated as a clique.
    Vertex a = b.min();
    clique[i] = b.size() == 1 || g.adjacent(a, (b - VertexSet(g.n(), {a})).min());
  }

  for (std::uint64_t dmask = 0; dmask < (1ULL << k); ++dmask) {
    long long forced = 0;
    for (int i = 0; i < k; ++i)
      if ((dmask >> i) & 1ULL) forced += size[i];
    if (forced > inst.q) continue;

    IntFeasibilityProblem p;
    for (int i = 0; i < k; ++i) {
      bool gone = (dmask >> i) & 1ULL;
      p.add_var(gone ? size[i] : 0, gone ? size[i] : size[i] - 1);
    }
    Constraint budget;
    for (int i = 0; i < k; ++i) budget.linear.push_back({i, Rational(1)});
    budget.rel = Relation::LessEq;
    budget.rhs = Rational(inst.q);
    p.constraints.push_back(budget);
    for (int i = 0; i < k; ++i) {
      if ((dmask >> i) & 1ULL) continue;
      Constraint c;
      c.rel = Relation::GreaterEq;
      long long deg = 0;
      for (Vertex j : quotient.neighbors(i)) {
        c.linear.push_back({j, Rational(1)});
        deg += size[j];
      }
      if (clique[i]) {
        c.linear.push_back({i, Rational(1)});
        deg += size[i] - 1;  // closed neighbourhood minus the vertex itself
      }
      c.rhs = Rational(ceil_of(inst.alpha * deg) + inst.beta);
      p.constraints.push_back(c);
    }
    ++result.branches_explored;
    auto found = int_feasible(p);
    if (!found) continue;

    VertexSet x(g.n());
    for (int i = 0; i < k; ++i) {
      long long take = (*found)[i];
      types.partition.blocks[i].for_each([&](Vertex v) {
        if (take > 0) {
          x.insert(v);
          --take;
        }
      });
    }
    if (!check_ldd(inst, x)) throw std::logic_error("materialized solution violates the program it came from");
    result.witness = x;
    return result;
  }
  return result;
}

}  // namespace modcard
