#include "modcard/gadgets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "modcard/graph_classes.hpp"

namespace modcard {

// ------------------------------------------------------------------ sumfree

std::vector<long long> sumfree_set(int n) {
  if (n < 1) throw std::invalid_argument("sumfree_set needs n >= 1");
  std::vector<long long> out;
  std::unordered_set<long long> sums;
  for (long long c = 1; static_cast<int>(out.size()) < n; ++c) {
    bool clash = sums.count(2 * c) > 0;
    for (long long a : out)
      if (clash || sums.count(a + c)) {
        clash = true;
        break;
      }
    if (clash) continue;
    for (long long a : out) sums.insert(a + c);
    sums.insert(2 * c);
    out.push_back(c);
  }
  return out;
}

bool is_sumfree(const std::vector<long long>& s) {
  std::unordered_set<long long> sums;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (!sums.insert(s[i] + s[j]).second) return false;
  return true;
}

// ------------------------------------------------------------------ triples

std::string ValidTriple::violation() const {
  if (I.empty()) return "I must be non-empty";
  if (cost.size() != I.size()) return "cost list does not match I";
  const BigInt floor_value = direction == TripleDirection::Decreasing ? 1 : 100;
  for (std::size_t j = 1; j <= length(); ++j)
    if (a(j - 1) <= a(j)) return "values must be strictly decreasing";
  if (I.back() <= floor_value) return "smallest value must exceed " + floor_value.get_str();
  if (direction == TripleDirection::Decreasing) {
    if (c0 != 0) return "c(a0) must be 0";
    for (std::size_t j = 1; j <= length(); ++j)
      if (c(j - 1) >= c(j)) return "costs must be strictly increasing";
  } else {
    if (cost.back() != 0) return "c(a_n) must be 0";
    for (std::size_t j = 1; j <= length(); ++j)
      if (c(j - 1) <= c(j)) return "costs must be strictly decreasing";
  }
  return {};
}

void ValidTriple::validate() const {
  auto v = violation();
  if (!v.empty()) throw std::invalid_argument("invalid triple: " + v);
}

std::optional<BigInt> ValidTriple::cost_of(const BigInt& value) const {
  for (std::size_t j = 0; j <= length(); ++j)
    if (a(j) == value) return c(j);
  return std::nullopt;
}

ValidTriple make_triple(TripleDirection dir, long long a0, long long c0,
                        const std::vector<std::pair<long long, long long>>& entries) {
  ValidTriple t;
  t.direction = dir;
  t.a0 = to_big(a0);
  t.c0 = to_big(c0);
  for (auto [a, c] : entries) {
    t.I.push_back(to_big(a));
    t.cost.push_back(to_big(c));
  }
  return t;
}

std::vector<std::pair<BigInt, BigInt>> deletion_star_profile(const ValidTriple& t) {
  t.validate();
  if (t.direction != TripleDirection::Decreasing) throw std::invalid_argument("deletion stars need a decreasing triple");
  std::vector<std::pair<BigInt, BigInt>> out;
  for (std::size_t i = 1; i <= t.length(); ++i) out.emplace_back(t.a(i - 1), t.c(i) - t.c(i - 1));
  out.emplace_back(t.a(t.length()), 1);
  return out;
}

std::vector<std::pair<BigInt, BigInt>> retention_star_profile(const ValidTriple& t) {
  t.validate();
  if (t.direction != TripleDirection::Increasing) throw std::invalid_argument("retention stars need an increasing triple");
  std::vector<std::pair<BigInt, BigInt>> out;
  out.emplace_back(t.a0, 1);
  for (std::size_t i = 1; i <= t.length(); ++i) out.emplace_back(t.a(i), t.c(i - 1) - t.c(i));
  return out;
}

BigInt star_profile_vertices(const std::vector<std::pair<BigInt, BigInt>>& profile) {
  BigInt total = 0;
  for (const auto& [leaves, count] : profile) total += count * (leaves + 1);
  return total;
}

BigInt retention_p(const ValidTriple& t) {
  BigInt p = 0;
  for (const auto& [leaves, count] : retention_star_profile(t)) p += count * leaves;
  return p;
}

namespace {

Graph stars_from_profile(const std::vector<std::pair<BigInt, BigInt>>& profile, long long cap) {
  BigInt total = star_profile_vertices(profile);
  if (total > to_big(cap))
    throw CapExceeded("star graph with " + total.get_str() + " vertices exceeds materialization cap " +
                      std::to_string(cap));
  std::vector<std::pair<Vertex, Vertex>> e;
  Vertex next = 0;
  for (const auto& [leaves_big, count_big] : profile) {
    long long leaves = leaves_big.get_si(), count = count_big.get_si();
    for (long long s = 0; s < count; ++s) {
      Vertex center = next++;
      for (long long l = 0; l < leaves; ++l) e.emplace_back(center, next++);
    }
  }
  return Graph(static_cast<int>(total.get_si()), e);
}

bool fits(const BigInt& v, long long lo, long long hi) { return v >= to_big(lo) && v <= to_big(hi); }

// Leaf counts of the stars of g, largest first (isolated vertices count as stars with no leaves).
std::vector<long long> leaf_counts(const Graph& g) {
  std::vector<long long> out;
  for (const auto& c : connected_components(g)) out.push_back(c.size() - 1);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Achievable values (bitmask) of the maximum degree after deleting exactly x vertices, x in [0, n].
std::vector<std::uint32_t> achievable_max_degree(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint32_t> rows(n, 0), out(n + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) rows[v] |= 1U << u;
  for (std::uint32_t x = 0; x < (1U << n); ++x) {
    int d = 0;
    for (int v = 0; v < n; ++v)
      if (!((x >> v) & 1U)) d = std::max(d, __builtin_popcount(rows[v] & ~x));
    out[__builtin_popcount(x)] |= 1U << d;
  }
  return out;
}

// Achievable values of min_{v outside X} |N(v) ∩ X| for |X| = x, x in [0, n-1].
std::vector<std::uint32_t> achievable_min_into(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint32_t> rows(n, 0), out(std::max(n, 1), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) rows[v] |= 1U << u;
  for (std::uint32_t x = 0; x + 1 < (1U << n); ++x) {
    int d = n;
    for (int v = 0; v < n; ++v)
      if (!((x >> v) & 1U)) d = std::min(d, __builtin_popcount(rows[v] & x));
    out[__builtin_popcount(x)] |= 1U << d;
  }
  return out;
}

int lowest_bit(std::uint32_t m) { return m ? __builtin_ctz(m) : -1; }
int highest_bit(std::uint32_t m) { return m ? 31 - __builtin_clz(m) : -1; }

bool size_bound_ok(long long n, const BigInt& a0, const BigInt& c) {
  BigInt bound;
  BigInt base = a0 * c;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), 10);
  return to_big(n) <= bound;
}

}  // namespace

Graph deletion_star_graph(const ValidTriple& t, long long cap) { return stars_from_profile(deletion_star_profile(t), cap); }

RetentionGraph retention_star_graph(const ValidTriple& t, long long cap) {
  RetentionGraph r;
  r.graph = stars_from_profile(retention_star_profile(t), cap);
  r.p = retention_p(t).get_si();
  r.l = 1;
  return r;
}

bool verify_deletion_graph(const Graph& g, const ValidTriple& t) {
  if (!t.is_valid() || t.direction != TripleDirection::Decreasing) return false;
  const long long n = g.n();
  if (max_degree(g) != t.a0 || !size_bound_ok(n, t.a0, t.c(t.length()))) return false;
  for (std::size_t i = 1; i <= t.length(); ++i)
    if (!fits(t.c(i), 0, n) || !fits(t.a(i), 0, n)) return false;

  if (n <= 16) {
    auto ach = achievable_max_degree(g);
    for (std::size_t i = 1; i <= t.length(); ++i) {
      long long ci = t.c(i).get_si(), ai = t.a(i).get_si(), prev = t.a(i - 1).get_si();
      if (!((ach[ci] >> ai) & 1U)) return false;                       // condition 2
      if (ci >= 1 && lowest_bit(ach[ci - 1]) < prev) return false;  // condition 3 (f is non-increasing)
    }
    return true;
  }
  if (!is_stars(g)) throw std::invalid_argument("deletion graph too large to enumerate and not a union of stars");
  auto d = leaf_counts(g);
  auto f = [&](long long x) { return x < static_cast<long long>(d.size()) ? d[x] : 0LL; };
  for (std::size_t i = 1; i <= t.length(); ++i) {
    long long ci = t.c(i).get_si(), ai = t.a(i).get_si(), prev = t.a(i - 1).get_si();
    // Cheapest way to end with maximum degree exactly ai: cut every larger star except the smallest
    // one that has at least ai leaves, which is trimmed to ai leaves instead.
    long long above = 0, keep = -1;
    for (long long c : d) {
      if (c > ai) ++above;
      if (c >= ai) keep = c;
    }
    if (keep < 0) return false;
    long long cost = above - (keep > ai ? 1 : 0) + (keep - ai);
    if (cost > ci || ci > n - (ai + 1)) return false;
    if (ci >= 1 && f(ci - 1) < prev) return false;
  }
  return true;
}

bool verify_retention_graph(const Graph& g, const ValidTriple& t, long long p, long long l) {
  if (!t.is_valid() || t.direction != TripleDirection::Increasing) return false;
  const long long n = g.n();
  if (n == 0 || max_degree(g) != t.a0 || !size_bound_ok(n, t.a0, t.c0)) return false;
  long long low = 0;
  for (Vertex v = 0; v < g.n(); ++v) low += g.degree(v) <= l;
  if (low != p) return false;
  auto target = [&](std::size_t j) { return j <= t.length() ? t.a(j) : to_big(l); };
  for (std::size_t j = 0; j <= t.length(); ++j)
    if (!fits(to_big(p) + t.c(j), 0, n - 1)) return false;

  if (n <= 16) {
    auto ach = achievable_min_into(g);
    for (std::size_t j = 0; j <= t.length(); ++j) {
      long long size = p + t.c(j).get_si();
      if (!t.a(j).fits_slong_p() || t.a(j) > 31 || !((ach[size] >> t.a(j).get_si()) & 1U)) return false;
      if (size >= 1 && highest_bit(ach[size - 1]) > target(j + 1)) return false;
    }
    return true;
  }
  if (!is_stars(g)) throw std::invalid_argument("retention graph too large to enumerate and not a union of stars");
  // cost[t]: fewest X-vertices giving every survivor at least t neighbours in X (-1 if impossible).
  auto d = leaf_counts(g);
  long long isolated = 0, with_leaves = 0;
  for (long long c : d) (c == 0 ? isolated : with_leaves)++;
  const long long top = d.empty() ? 0 : d.front();
  std::vector<long long> cost(top + 1, -1);
  cost[0] = 0;
  if (top >= 1) cost[1] = isolated + with_leaves;
  for (long long s = 2; s <= top; ++s) {
    long long big = std::count_if(d.begin(), d.end(), [&](long long c) { return c >= s; });
    cost[s] = n - big;
  }
  auto f = [&](long long x) {
    long long best = 0;
    for (long long s = 0; s <= top; ++s)
      if (cost[s] >= 0 && cost[s] <= x) best = s;
    return best;
  };
  for (std::size_t j = 0; j <= t.length(); ++j) {
    long long size = p + t.c(j).get_si();
    if (to_big(f(size)) != t.a(j)) return false;
    if (size >= 1 && to_big(f(size - 1)) > target(j + 1)) return false;
  }
  return true;
}

}  // namespace modcard
