#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modcard/graph.hpp"
#include "modcard/rational.hpp"

namespace modcard {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline constexpr long long kDefaultMaterializeCap = 200000;

// gmpxx has no long long overloads; long is 64-bit on the supported platforms.
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

// --------------------------------------------------------------- sumfree sets

// Greedy 2-sumfree set: every pair (with repetition) has a distinct sum.
std::vector<long long> sumfree_set(int n);
bool is_sumfree(const std::vector<long long>& s);

// ------------------------------------------------------------ valid triples

enum class TripleDirection { Decreasing, Increasing };

struct ValidTriple {
  TripleDirection direction = TripleDirection::Decreasing;
  BigInt a0;
  std::vector<BigInt> I;     // a_1 > ... > a_n
  BigInt c0;                 // c(a_0)
  std::vector<BigInt> cost;  // c(a_i), aligned with I

  // Empty string when valid, otherwise the violated condition.
  std::string violation() const;
  bool is_valid() const { return violation().empty(); }
  void validate() const;
  // a_j for j in [0, n] (j = 0 is a_0) and its cost.
  const BigInt& a(std::size_t j) const { return j == 0 ? a0 : I[j - 1]; }
  const BigInt& c(std::size_t j) const { return j == 0 ? c0 : cost[j - 1]; }
  std::size_t length() const { return I.size(); }
  std::optional<BigInt> cost_of(const BigInt& value) const;
};

ValidTriple make_triple(TripleDirection dir, long long a0, long long c0, const std::vector<std::pair<long long, long long>>& entries);

// Star counts of the constructions: (leaf count, how many stars), largest stars first.
std::vector<std::pair<BigInt, BigInt>> deletion_star_profile(const ValidTriple& t);
std::vector<std::pair<BigInt, BigInt>> retention_star_profile(const ValidTriple& t);
BigInt star_profile_vertices(const std::vector<std::pair<BigInt, BigInt>>& profile);
BigInt retention_p(const ValidTriple& t);

Graph deletion_star_graph(const ValidTriple& t, long long cap = kDefaultMaterializeCap);

struct RetentionGraph {
  Graph graph;
  long long p = 0;
  long long l = 1;
};
RetentionGraph retention_star_graph(const ValidTriple& t, long long cap = kDefaultMaterializeCap);

// Checks Definitions 2/3 by subset enumeration (n <= 16) or, for unions of stars, structurally.
bool verify_deletion_graph(const Graph& g, const ValidTriple& t);
bool verify_retention_graph(const Graph& g, const ValidTriple& t, long long p, long long l);

// ------------------------------------------------- symmetric multicolored clique

struct SmcInstance {
  int k = 0;  // colors
  int n = 0;  // vertices per color
  Graph graph;

  Vertex vertex(int color, int index) const { return color * n + index; }
  int color_of(Vertex v) const { return v / n; }
  int index_of(Vertex v) const { return v % n; }
  // Empty string when the color classes are independent and edges come in symmetric pairs.
  std::string violation() const;
};

SmcInstance smc_from_graph(const Graph& g, int k);
// Random host graph with the given edge density and a planted k-clique, blown up into k colors.
SmcInstance smc_from_clique(int k, int n, const Rational& density, std::uint64_t seed);
// Index chosen in each color class, or none.
std::optional<std::vector<int>> find_multicolored_clique(const SmcInstance& s);
bool is_multicolored_clique(const SmcInstance& s, const std::vector<int>& pick);

SmcInstance read_smc(std::istream& in);
void write_smc(std::ostream& out, const SmcInstance& s);

// --------------------------------------------------------------- reduction

enum class ReductionCase { Alpha0, Alpha01, Alpha1 };
std::string to_string(ReductionCase c);
ReductionCase parse_reduction_case(const std::string& s);

enum class FactorKind { Edgeless, DeletionStars, RetentionStars };
std::string to_string(FactorKind k);

struct Factor {
  std::string name;  // e.g. "S_2", "U_1_3", "K"
  std::string role;  // e.g. "S_i", "U_ij", "K"
  int i = 0, j = 0;  // 1-based color indices, 0 when unused
  FactorKind kind = FactorKind::Edgeless;
  BigInt size;
  std::optional<ValidTriple> triple;
  BigInt pad;  // isolated padding vertices inside a retention factor
  BigInt p;    // retention threshold p of the star part
  BigInt l;
};

struct ReductionOverrides {
  std::optional<BigInt> r;
  std::optional<BigInt> s;
  std::optional<BigInt> beta_abs;
  bool any() const { return r || s || beta_abs; }
};

struct ReductionBlueprint {
  ReductionCase rcase = ReductionCase::Alpha1;
  BigRational alpha;
  int k = 0, n = 0;
  bool scaled = false;
  std::map<std::string, BigInt> scalars;  // r, r_multiplier, beta, s, t, l, a0, x, y, m, q, q1, q2, p, p_prime
  std::vector<BigInt> I;                  // scaled sumfree set, descending
  std::map<std::pair<int, int>, std::vector<BigInt>> pair_sums;  // I_ij, descending, 1-based i < j
  std::vector<Factor> factors;
  std::vector<std::pair<int, int>> adjacency;  // factor index pairs, first < second

  int factor_index(const std::string& name) const;  // -1 when absent
  const BigInt& scalar(const std::string& name) const;
};

// beta is only read for the alpha01 case (where it is a fixed constant); the other cases set it.
ReductionBlueprint build_reduction(const SmcInstance& smc, ReductionCase c, const BigRational& alpha = 0,
                                   const BigInt& beta = 0, const ReductionOverrides& overrides = {});
int blueprint_stars_mc(const ReductionBlueprint& bp);

struct MaterializedReduction {
  Graph graph;
  BigInt q;
  BigInt beta;
  std::vector<VertexSet> factor_vertices;  // aligned with bp.factors
};
MaterializedReduction materialize(const ReductionBlueprint& bp, long long cap = kDefaultMaterializeCap);

// Per-factor deletion counts with the degree each table factor is guaranteed to reach.
struct ReductionWitness {
  std::vector<BigInt> chi;
  std::vector<BigInt> degree;  // deletion factors: max degree bound; retention factors: min X-degree bound
};

ReductionWitness witness_from_clique(const ReductionBlueprint& bp, const std::vector<int>& clique);

struct WitnessCheck {
  bool ok = false;
  BigInt total;
  std::vector<std::string> failures;
};
WitnessCheck check_witness(const ReductionBlueprint& bp, const ReductionWitness& w);

// Concrete vertex set realizing a witness on a materialized instance.
VertexSet materialize_witness(const ReductionBlueprint& bp, const MaterializedReduction& m, const ReductionWitness& w);

}  // namespace modcard
