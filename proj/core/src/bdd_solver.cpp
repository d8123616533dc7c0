#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "modcard/gmc.hpp"
#include "modcard/modular_decomposition.hpp"
#include "modcard/solvers.hpp"

namespace modcard {

namespace {

bool bdd_supported(const GraphClass& c) {
  for (const auto& a : c.atoms())
    switch (a.tag) {
      case ClassTag::Cluster:
      case ClassTag::LinearForest:
      case ClassTag::BinaryForest:
      case ClassTag::BoundedDegForest:
      case ClassTag::Edgeless:
      case ClassTag::Clique: break;
      default: return false;
    }
  return true;
}

struct Module {
  InducedSubgraph sub;
  long long size = 0;
  bool cluster = false;
  bool segmented = false;  // type 1: exact table that is branched segment by segment
  std::shared_ptr<const PiecewiseLinearFn> fn;
};

// Enumerates the mixed-radix product of segment choices, calling f with one index per segmented module.
template <class F>
bool for_each_segment_choice(const std::vector<int>& radix, F&& f) {
  std::vector<int> pick(radix.size(), 0);
  while (true) {
    if (f(pick)) return true;
    std::size_t i = 0;
    while (i < radix.size() && ++pick[i] == radix[i]) pick[i++] = 0;
    if (i == radix.size()) return false;
  }
}

}  // namespace

SolveResult solve_bdd_gmc(const Graph& g, long long q, long long beta, const GraphClass& cls, const BddOptions& opts) {
  if (!bdd_supported(cls)) throw std::invalid_argument("solve_bdd_gmc does not support class " + cls.name());
  if (beta > 0) throw std::invalid_argument("bounded degree deletion needs beta <= 0");
  if (q < 0) throw std::invalid_argument("q must be non-negative");
  SolveResult result;
  const long long bound = -beta;
  if (g.n() == 0) {
    result.witness = VertexSet(0);
    return result;
  }

  ModularPartition part = class_modular_partition(cls, g);
  Graph quotient = quotient_graph(g, part);
  const int k = part.size();
  std::vector<Module> mods(k);
  for (int i = 0; i < k; ++i) {
    Module& m = mods[i];
    m.sub = induced_subgraph(g, part.blocks[i]);
    m.size = m.sub.graph.n();
    m.cluster = is_cluster(m.sub.graph);
    if (m.cluster && opts.cluster_form != ClusterTableForm::StepCompressed) {
      auto f = cluster_piecewise(m.sub.graph);
      f.mode = opts.cluster_form == ClusterTableForm::Ceiling ? EvalMode::Ceiling : EvalMode::Exact;
      m.fn = std::make_shared<PiecewiseLinearFn>(std::move(f));
    } else {
      m.fn = std::make_shared<PiecewiseLinearFn>(compress_step_table(deletion_table(m.sub.graph, opts.caps)));
      m.segmented = true;
    }
  }

  std::vector<std::vector<int>> nbrs(k);
  std::vector<long long> nbr_size(k, 0);
  for (int i = 0; i < k; ++i)
    for (Vertex j : quotient.neighbors(i)) {
      nbrs[i].push_back(j);
      nbr_size[i] += mods[j].size;
    }

  // Guard branches: D = set of fully deleted modules, in ascending bitmask order.
  const std::uint64_t guards = k >= 63 ? ~0ULL : (1ULL << k);
  if (k > 24) throw CapExceeded("too many modules for guard branching");
  for (std::uint64_t dmask = 0; dmask < guards; ++dmask) {
    long long forced = 0;
    for (int i = 0; i < k; ++i)
      if ((dmask >> i) & 1ULL) forced += mods[i].size;
    if (forced > q) continue;

    IntFeasibilityProblem base;
    for (int i = 0; i < k; ++i) {
      bool gone = (dmask >> i) & 1ULL;
      base.add_var(gone ? mods[i].size : 0, gone ? mods[i].size : mods[i].size - 1);
    }
    Constraint budget;
    for (int i = 0; i < k; ++i) budget.linear.push_back({i, Rational(1)});
    budget.rel = Relation::LessEq;
    budget.rhs = Rational(q);
    base.constraints.push_back(budget);
    for (int i = 0; i < k; ++i) {
      if ((dmask >> i) & 1ULL) continue;
      // f_i(x_i) + sum over adjacent modules of their survivors <= bound
      Constraint c;
      c.piecewise.push_back({i, Rational(1), mods[i].fn});
      for (int j : nbrs[i]) c.linear.push_back({j, Rational(-1)});
      c.rel = Relation::LessEq;
      c.rhs = Rational(bound - nbr_size[i]);
      base.constraints.push_back(c);
    }

    std::vector<int> seg_mods;
    for (int i = 0; i < k; ++i)
      if (mods[i].segmented && !((dmask >> i) & 1ULL)) seg_mods.push_back(i);
    std::stable_sort(seg_mods.begin(), seg_mods.end(),
                     [&](int a, int b) { return mods[a].fn->segment_count() < mods[b].fn->segment_count(); });
    std::vector<int> radix;
    for (int i : seg_mods) radix.push_back(mods[i].fn->segment_count());

    std::optional<std::vector<long long>> found;
    for_each_segment_choice(radix, [&](const std::vector<int>& pick) {
      IntFeasibilityProblem p = base;
      for (std::size_t s = 0; s < seg_mods.size(); ++s) {
        int i = seg_mods[s];
        auto [lo, hi] = mods[i].fn->segment_domain(pick[s], p.bounds[i].first, p.bounds[i].second);
        if (lo > hi) return false;
        p.bounds[i] = {lo, hi};
      }
      ++result.branches_explored;
      found = int_feasible(p);
      return found.has_value();
    });
    if (!found) continue;

    VertexSet x(g.n());
    for (int i = 0; i < k; ++i) {
      const Module& m = mods[i];
      int take = static_cast<int>((*found)[i]);
      VertexSet local = m.cluster ? cluster_deletion_set(m.sub.graph, take) : deletion_set(m.sub.graph, take, opts.caps);
      x |= lift(m.sub, local, g.n());
    }
    auto rest = induced_subgraph(g, x.complement());
    if (x.size() > q || max_degree(rest.graph) > bound)
      throw std::logic_error("materialized deletion set violates the program it came from");
    result.witness = x;
    return result;
  }
  return result;
}

}  // namespace modcard
