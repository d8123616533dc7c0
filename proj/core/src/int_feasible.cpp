#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "modcard/solvers.hpp"

namespace modcard {

Rational evaluate_lhs(const Constraint& c, const std::vector<long long>& x) {
  Rational s(0);
  for (const auto& t : c.linear) s += t.coeff * x[t.var];
  for (const auto& t : c.piecewise) s += t.coeff * t.fn->value(Rational(x[t.var]));
  return s;
}

bool satisfies(const IntFeasibilityProblem& p, const std::vector<long long>& x) {
  for (std::size_t i = 0; i < p.bounds.size(); ++i)
    if (x[i] < p.bounds[i].first || x[i] > p.bounds[i].second) return false;
  for (const auto& c : p.constraints) {
    Rational v = evaluate_lhs(c, x);
    if (c.rel == Relation::LessEq ? v > c.rhs : v < c.rhs) return false;
  }
  return true;
}

namespace {

struct Range {
  Rational lo, hi;
};

// Exact range of fn over the integers of [lo, hi]: extremes of a piecewise-linear function (and of its
// ceiling) over an integer interval sit at the interval ends or next to a breakpoint.
Range piecewise_range(const PiecewiseLinearFn& fn, long long lo, long long hi) {
  Rational a = fn.value(Rational(lo)), b = a;
  auto take = [&](long long x) {
    if (x < lo || x > hi) return;
    Rational v = fn.value(Rational(x));
    a = std::min(a, v);
    b = std::max(b, v);
  };
  take(hi);
  for (const auto& bp : fn.breakpoints) {
    take(floor_of(bp.x));
    take(ceil_of(bp.x));
  }
  return {a, b};
}

class Search {
 public:
  Search(const IntFeasibilityProblem& p, FeasibilityStats* stats) : p_(p), stats_(stats) {
    const std::size_t k = p.bounds.size();
    order_.resize(k);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return p.bounds[a].second - p.bounds[a].first < p.bounds[b].second - p.bounds[b].first;
    });
    lo_.resize(k);
    hi_.resize(k);
    for (std::size_t i = 0; i < k; ++i) std::tie(lo_[i], hi_[i]) = p.bounds[i];
  }

  std::optional<std::vector<long long>> run() {
    for (std::size_t i = 0; i < lo_.size(); ++i)
      if (lo_[i] > hi_[i]) return std::nullopt;
    if (dfs(0)) return lo_;
    return std::nullopt;
  }

 private:
  bool consistent() const {
    for (const auto& c : p_.constraints) {
      Rational mn(0), mx(0);
      for (const auto& t : c.linear) {
        Rational a = t.coeff * lo_[t.var], b = t.coeff * hi_[t.var];
        mn += std::min(a, b);
        mx += std::max(a, b);
      }
      for (const auto& t : c.piecewise) {
        Range r = piecewise_range(*t.fn, lo_[t.var], hi_[t.var]);
        Rational a = t.coeff * r.lo, b = t.coeff * r.hi;
        mn += std::min(a, b);
        mx += std::max(a, b);
      }
      if (c.rel == Relation::LessEq && mn > c.rhs) return false;
      if (c.rel == Relation::GreaterEq && mx < c.rhs) return false;
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (stats_) ++stats_->nodes;
    if (!consistent()) return false;
    if (depth == order_.size()) return true;  // every domain is a single point and all constraints hold
    int var = order_[depth];
    const long long lo = lo_[var], hi = hi_[var];
    for (long long v = lo; v <= hi; ++v) {
      lo_[var] = hi_[var] = v;
      if (dfs(depth + 1)) return true;
    }
    lo_[var] = lo;
    hi_[var] = hi;
    return false;
  }

  const IntFeasibilityProblem& p_;
  FeasibilityStats* stats_;
  std::vector<int> order_;
  std::vector<long long> lo_, hi_;
};

}  // namespace

std::optional<std::vector<long long>> int_feasible(const IntFeasibilityProblem& p, FeasibilityStats* stats) {
  for (const auto& c : p.constraints) {
    for (const auto& t : c.linear)
      if (t.var < 0 || t.var >= static_cast<int>(p.bounds.size())) throw std::invalid_argument("unknown variable");
    for (const auto& t : c.piecewise)
      if (t.var < 0 || t.var >= static_cast<int>(p.bounds.size()) || !t.fn)
        throw std::invalid_argument("bad piecewise term");
  }
  return Search(p, stats).run();
}

}  // namespace modcard
