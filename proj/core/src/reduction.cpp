#include <algorithm>
#include <functional>
#include <stdexcept>

#include "modcard/gadgets.hpp"
#include "modcard/tables.hpp"

namespace modcard {

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::Alpha0: return "alpha0";
    case ReductionCase::Alpha01: return "alpha01";
    case ReductionCase::Alpha1: return "alpha1";
  }
  return "?";
}

ReductionCase parse_reduction_case(const std::string& s) {
  if (s == "alpha0") return ReductionCase::Alpha0;
  if (s == "alpha01") return ReductionCase::Alpha01;
  if (s == "alpha1") return ReductionCase::Alpha1;
  throw std::invalid_argument("unknown reduction case '" + s + "' (expected alpha0, alpha01 or alpha1)");
}

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Edgeless: return "edgeless";
    case FactorKind::DeletionStars: return "deletion-stars";
    case FactorKind::RetentionStars: return "retention-stars";
  }
  return "?";
}

int ReductionBlueprint::factor_index(const std::string& name) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].name == name) return static_cast<int>(i);
  return -1;
}

const BigInt& ReductionBlueprint::scalar(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) throw std::out_of_range("blueprint has no scalar '" + name + "'");
  return it->second;
}

int blueprint_stars_mc(const ReductionBlueprint& bp) { return static_cast<int>(bp.factors.size()); }

namespace {

BigInt power(const BigInt& b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

BigInt floor_q(const BigRational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_q(const BigRational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const std::string& what) {
  if (a % b != 0) throw std::logic_error(what + " is not integral");
  return a / b;
}

std::string pair_name(const char* prefix, int i, int j) {
  return std::string(prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string single_name(const char* prefix, int i) { return std::string(prefix) + "_" + std::to_string(i); }

}  // namespace

ReductionBlueprint build_reduction(const SmcInstance& smc, ReductionCase rc, const BigRational& alpha_in,
                                   const BigInt& beta_in, const ReductionOverrides& ov) {
  if (auto v = smc.violation(); !v.empty()) throw std::invalid_argument("malformed SMC instance: " + v);
  ReductionBlueprint bp;
  bp.rcase = rc;
  bp.k = smc.k;
  bp.n = smc.n;
  bp.scaled = ov.any();
  const int k = smc.k, n = smc.n;
  const BigInt K = k, Nn = n, C = BigInt(k) * (k - 1) / 2, nk = BigInt(n) * k;

  BigRational alpha;
  switch (rc) {
    case ReductionCase::Alpha0: alpha = 0; break;
    case ReductionCase::Alpha1: alpha = 1; break;
    case ReductionCase::Alpha01:
      alpha = alpha_in;
      alpha.canonicalize();
      if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha01 needs 0 < alpha < 1");
      if (ov.beta_abs) throw std::invalid_argument("alpha01 takes beta as an input constant; no beta override");
      break;
  }
  bp.alpha = alpha;
  const BigRational one_minus = 1 - alpha;

  // --- r: scale factor of the sumfree set (with the integrality multiplier) ---
  BigInt r0, mult = 1, r;
  const BigInt two_k1 = 2 * (K - 1);
  if (rc == ReductionCase::Alpha01) {
    BigInt absb = abs(beta_in);
    r0 = power(ceil_q(BigRational(10 * K * (absb + 10)) / (alpha * one_minus)), 10);
    const BigInt P = alpha.get_num(), Q = alpha.get_den();
    const BigInt need = 2 * Q * (K - 1);
    mult = need / gcd(need, P * r0);
  } else {
    r0 = 2 * (K - 1) * (K - 1) * K * K * K;
    if (rc == ReductionCase::Alpha0)
      while (r0 * mult <= 100) ++mult;
  }
  r = r0 * mult;
  if (ov.r) {
    r = *ov.r;
    if (r < 1) throw std::invalid_argument("override r must be positive");
    if (rc == ReductionCase::Alpha01) {
      if ((alpha.get_num() * r) % (2 * alpha.get_den() * (K - 1)) != 0)
        throw std::invalid_argument("override r must make alpha*r/2 a multiple of k-1");
    } else if (r % two_k1 != 0) {
      throw std::invalid_argument("override r must be a multiple of 2(k-1)");
    }
    if (rc == ReductionCase::Alpha0 && r <= 100) throw std::invalid_argument("alpha0 needs override r > 100");
  }

  // --- I (descending) and the per-pair sums ---
  auto base = sumfree_set(n);
  for (int idx = 0; idx < n; ++idx) bp.I.push_back(r * to_big(base[n - 1 - idx]));
  const BigInt a1 = bp.I.front(), an = bp.I.back();
  for (auto [u, v] : smc.graph.edges()) {
    int cu = smc.color_of(u), cv = smc.color_of(v);
    int iu = smc.index_of(u), iv = smc.index_of(v);
    if (cu > cv) std::swap(cu, cv), std::swap(iu, iv);
    bp.pair_sums[{cu + 1, cv + 1}].push_back(bp.I[iu] + bp.I[iv]);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      auto& sums = bp.pair_sums[{i, j}];
      if (sums.empty())
        throw std::invalid_argument("color classes " + std::to_string(i) + " and " + std::to_string(j) +
                                    " share no edge");
      std::sort(sums.begin(), sums.end(), std::greater<>());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    }

  // --- case scalars (Table 2) ---
  const BigInt x = power(10 * a1, 5), y = power(nk * a1, 10000), m = power(nk * a1, 20000);
  BigInt beta, s, l, t, a0;
  switch (rc) {
    case ReductionCase::Alpha1:
      beta = -(ov.beta_abs ? *ov.beta_abs : power(nk, 10000));
      s = ov.s ? *ov.s : power(Nn, 10);
      l = 0;
      t = s;
      a0 = (K + C) * s + 1;
      break;
    case ReductionCase::Alpha01:
      beta = beta_in;
      s = ov.s ? *ov.s : 0;
      l = 0;
      t = floor_q(one_minus * one_minus * alpha * x) + s;
      a0 = power(x, 10);
      break;
    case ReductionCase::Alpha0:
      beta = ov.beta_abs ? *ov.beta_abs : power(nk, 50);
      s = ov.s ? *ov.s : power(Nn, 10);
      l = 1;
      t = s;
      a0 = a1 + 1;
      break;
  }
  const BigInt absb = abs(beta);
  const BigInt p_prime = rc == ReductionCase::Alpha0 ? power(Nn, 210) : BigInt(0);

  // --- edgeless factor sizes ---
  const BigRational sl(s + l);
  const BigInt sizeN = floor_q(alpha * one_minus * m + 2 * one_minus * sl);
  const BigInt sizeK = floor_q(alpha * one_minus * m + one_minus * sl);
  const BigInt sizeA = floor_q(one_minus * y);
  const BigInt sizeB = ceil_q(alpha * alpha * one_minus * x);
  const BigInt sizeBij = ceil_q(2 * alpha * alpha * one_minus * x);
  const BigInt sizeR = floor_q(BigRational(absb - s) - one_minus * l);
  const BigInt sizeRij = floor_q(BigRational(absb - 2 * s) - 2 * one_minus * l);

  auto add_edgeless = [&](const std::string& name, const std::string& role, int i, int j, const BigInt& size) {
    if (size < 0) throw std::invalid_argument("factor " + name + " would have negative size " + size.get_str());
    if (size == 0) return;
    Factor f;
    f.name = name;
    f.role = role;
    f.i = i;
    f.j = j;
    f.kind = FactorKind::Edgeless;
    f.size = size;
    bp.factors.push_back(std::move(f));
  };
  auto add_table = [&](const std::string& name, const std::string& role, int i, int j, ValidTriple tr,
                       const BigInt& pad) {
    auto why = tr.violation();
    if (!why.empty()) throw std::invalid_argument("factor " + name + " has an invalid triple: " + why);
    Factor f;
    f.name = name;
    f.role = role;
    f.i = i;
    f.j = j;
    if (tr.direction == TripleDirection::Decreasing) {
      f.kind = FactorKind::DeletionStars;
      f.size = star_profile_vertices(deletion_star_profile(tr));
    } else {
      f.kind = FactorKind::RetentionStars;
      f.pad = pad;
      f.p = retention_p(tr);
      f.l = 1;
      f.size = pad + star_profile_vertices(retention_star_profile(tr));
    }
    f.triple = std::move(tr);
    bp.factors.push_back(std::move(f));
  };

  // --- S_i triple (shared by every color) ---
  ValidTriple s_triple;
  if (rc == ReductionCase::Alpha0) {
    s_triple.direction = TripleDirection::Increasing;
    s_triple.a0 = a0;
    s_triple.c0 = K * s;
    for (const auto& a : bp.I) {
      s_triple.I.push_back(a);
      s_triple.cost.push_back(exact_div(a - an, 2, "c(a_j)"));
    }
  } else {
    s_triple.direction = TripleDirection::Decreasing;
    s_triple.a0 = a0;
    s_triple.c0 = 0;
    for (const auto& a : bp.I) {
      s_triple.I.push_back(a);
      s_triple.cost.push_back(t - ceil_q(alpha * a / 2));
    }
    s_triple.I.push_back(an - 1);
    s_triple.cost.push_back(a0);
  }
  const BigInt p = rc == ReductionCase::Alpha0 && s_triple.is_valid() ? retention_p(s_triple) : BigInt(0);

  add_edgeless("N", "N", 0, 0, sizeN);
  add_edgeless("K", "K", 0, 0, sizeK);
  for (int i = 1; i <= k; ++i) {
    add_edgeless(single_name("A", i), "A_i", i, 0, sizeA);
    add_edgeless(single_name("B", i), "B_i", i, 0, sizeB);
    add_edgeless(single_name("D", i), "D_i", i, 0, sizeA);
    add_edgeless(single_name("R", i), "R_i", i, 0, sizeR);
    add_table(single_name("S", i), "S_i", i, 0, s_triple, 0);
    add_edgeless(single_name("T", i), "T_i", i, 0, t);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto& sums = bp.pair_sums.at({i, j});
      const BigInt ell = sums.back();
      ValidTriple u;
      BigInt pad = 0;
      if (rc == ReductionCase::Alpha0) {
        u.direction = TripleDirection::Increasing;
        u.a0 = 2 * a1 + 1;
        u.c0 = K * s;
        for (const auto& ab : sums) {
          u.I.push_back(ab);
          u.cost.push_back(exact_div(ab - ell, two_k1, "c_ij"));
        }
        if (u.is_valid())
          pad = p_prime - retention_p(u) + exact_div(ell - 2 * an, two_k1, "p'_ij");
      } else {
        u.direction = TripleDirection::Decreasing;
        u.a0 = a0;
        u.c0 = 0;
        for (const auto& ab : sums) {
          u.I.push_back(ab);
          // ab = a + b for a unique pair {a, b} of I (2-sumfree); alpha*a/2 is integral by the choice of r.
          u.cost.push_back(t - exact_div(ceil_q(alpha * ab / 2), K - 1, "c_ij"));
        }
        u.I.push_back(ell - 1);
        u.cost.push_back(a0);
      }
      add_table(pair_name("U", i, j), "U_ij", i, j, std::move(u), pad);
      add_edgeless(pair_name("R", i, j), "R_ij", i, j, sizeRij);
      add_edgeless(pair_name("A", i, j), "A_ij", i, j, sizeA);
      add_edgeless(pair_name("B", i, j), "B_ij", i, j, sizeBij);
    }

  // --- adjacency (absent zero-size factors are skipped) ---
  auto link = [&](const std::string& a, const std::string& b) {
    int x1 = bp.factor_index(a), x2 = bp.factor_index(b);
    if (x1 < 0 || x2 < 0) return;
    bp.adjacency.emplace_back(std::min(x1, x2), std::max(x1, x2));
  };
  for (int i = 1; i <= k; ++i) {
    link(single_name("A", i), "K");
    link(single_name("B", i), "K");
    link(single_name("D", i), "K");
    link(single_name("R", i), single_name("A", i));
    link(single_name("S", i), single_name("R", i));
    link(single_name("S", i), single_name("B", i));
    link(single_name("S", i), single_name("T", i));
    link(single_name("T", i), single_name("D", i));
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      const auto u = pair_name("U", i, j);
      link(u, single_name("T", i));
      link(u, single_name("T", j));
      link(u, pair_name("B", i, j));
      link(u, pair_name("R", i, j));
      link(pair_name("A", i, j), pair_name("R", i, j));
      link(pair_name("A", i, j), "N");
      link(pair_name("B", i, j), "K");
    }
  std::sort(bp.adjacency.begin(), bp.adjacency.end());

  // --- q (Table 3) ---
  BigInt q1, q2;
  switch (rc) {
    case ReductionCase::Alpha0:
      q1 = K * y + (K + C) * beta - (K + 2 * C - 3) * (s + l);
      q2 = K * p + C * p_prime + K * (s + l - an);
      break;
    case ReductionCase::Alpha01:
      q1 = C * (sizeA + sizeBij) + K * (sizeB + 2 * sizeA);
      q2 = (K + C) * t + 2 * K * absb;
      break;
    case ReductionCase::Alpha1:
      q1 = 0;
      q2 = (K + C) * s;
      break;
  }

  auto& sc = bp.scalars;
  sc["r"] = r;
  sc["r_multiplier"] = ov.r ? BigInt(1) : mult;
  sc["beta"] = beta;
  sc["s"] = s;
  sc["t"] = t;
  sc["l"] = l;
  sc["a0"] = a0;
  sc["x"] = x;
  sc["y"] = y;
  sc["m"] = m;
  sc["q1"] = q1;
  sc["q2"] = q2;
  sc["q"] = q1 + q2;
  sc["p"] = p;
  sc["p_prime"] = p_prime;
  return bp;
}

// ------------------------------------------------------------------ witness

ReductionWitness witness_from_clique(const ReductionBlueprint& bp, const std::vector<int>& clique) {
  if (static_cast<int>(clique.size()) != bp.k) throw std::invalid_argument("clique must pick one vertex per color");
  for (int c : clique)
    if (c < 0 || c >= bp.n) throw std::invalid_argument("clique index out of range");
  std::vector<BigInt> hat(bp.k + 1);
  for (int i = 1; i <= bp.k; ++i) hat[i] = bp.I[clique[i - 1]];
  for (int i = 1; i <= bp.k; ++i)
    for (int j = i + 1; j <= bp.k; ++j) {
      const auto& sums = bp.pair_sums.at({i, j});
      if (std::find(sums.begin(), sums.end(), hat[i] + hat[j]) == sums.end())
        throw std::invalid_argument("not a multicolored clique: colors " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not adjacent");
    }

  const BigInt& beta = bp.scalar("beta");
  const BigInt& s = bp.scalar("s");
  const BigInt& l = bp.scalar("l");
  ReductionWitness w;
  w.chi.resize(bp.factors.size());
  w.degree.resize(bp.factors.size());
  const bool zero = bp.rcase == ReductionCase::Alpha0;
  for (std::size_t f = 0; f < bp.factors.size(); ++f) {
    const Factor& fc = bp.factors[f];
    const std::string& role = fc.role;
    BigInt& chi = w.chi[f];
    if (role == "S_i" || role == "U_ij") {
      BigInt d = role == "S_i" ? hat[fc.i] : hat[fc.i] + hat[fc.j];
      auto c = fc.triple->cost_of(d);
      if (!c) throw std::logic_error("witness degree missing from the factor triple");
      chi = zero ? fc.pad + fc.p + *c : *c;
      w.degree[f] = d;
    } else if (role == "T_i") {
      if (zero) {
        chi = s + l - hat[fc.i];
      } else if (bp.rcase == ReductionCase::Alpha1) {
        chi = hat[fc.i];
      } else {
        chi = 2 * (abs(beta) + ceil_q(bp.alpha * hat[fc.i] / 2));
      }
    } else if (zero) {
      chi = (role == "A_i" || role == "A_ij") ? BigInt(0) : fc.size;
    } else {
      chi = (role == "A_i" || role == "B_i" || role == "D_i" || role == "A_ij" || role == "B_ij") ? fc.size : BigInt(0);
    }
  }
  return w;
}

WitnessCheck check_witness(const ReductionBlueprint& bp, const ReductionWitness& w) {
  WitnessCheck out;
  const std::size_t F = bp.factors.size();
  if (w.chi.size() != F || w.degree.size() != F) {
    out.failures.push_back("witness does not match the factor roster");
    return out;
  }
  std::vector<std::vector<int>> adj(F);
  for (auto [a, b] : bp.adjacency) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const BigRational alpha = bp.alpha;
  const BigRational beta(bp.scalar("beta"));
  for (std::size_t f = 0; f < F; ++f) {
    const Factor& fc = bp.factors[f];
    const BigInt& chi = w.chi[f];
    out.total += chi;
    if (chi < 0 || chi > fc.size) {
      out.failures.push_back(fc.name + ": count out of range");
      continue;
    }
    if (chi == fc.size) continue;  // nothing survives
    BigInt ext = 0, ext_x = 0;
    for (int g : adj[f]) {
      ext += bp.factors[g].size;
      ext_x += w.chi[g];
    }
    bool ok = true;
    switch (fc.kind) {
      case FactorKind::Edgeless: ok = BigRational(ext_x) >= alpha * ext + beta; break;
      case FactorKind::DeletionStars: {
        auto c = fc.triple->cost_of(w.degree[f]);
        if (!c || chi < *c) {
          out.failures.push_back(fc.name + ": table cost not met");
          continue;
        }
        // A survivor keeps at most degree[f] neighbours inside the factor; its other inside neighbours are in X.
        ok = BigRational(ext_x) >= alpha * (ext + w.degree[f]) + beta;
        break;
      }
      case FactorKind::RetentionStars: {
        auto c = fc.triple->cost_of(w.degree[f]);
        if (!c || chi < fc.pad + fc.p + *c) {
          out.failures.push_back(fc.name + ": table cost not met");
          continue;
        }
        if (alpha != 0) {
          out.failures.push_back(fc.name + ": retention factors need alpha = 0");
          continue;
        }
        ok = BigRational(ext_x + w.degree[f]) >= beta;
        break;
      }
    }
    if (!ok) out.failures.push_back(fc.name + ": degree inequality fails");
  }
  if (out.total != bp.scalar("q"))
    out.failures.push_back("sum of counts " + out.total.get_str() + " differs from q " + bp.scalar("q").get_str());
  out.ok = out.failures.empty();
  return out;
}

// ------------------------------------------------------------- materialization

namespace {

constexpr long long kMaxMaterializedEdges = 20'000'000;

Graph factor_graph(const Factor& f, long long cap) {
  switch (f.kind) {
    case FactorKind::Edgeless: return Graph(static_cast<int>(f.size.get_si()));
    case FactorKind::DeletionStars: return deletion_star_graph(*f.triple, cap);
    case FactorKind::RetentionStars: {
      Graph stars = retention_star_graph(*f.triple, cap).graph;
      return disjoint_union(Graph(static_cast<int>(f.pad.get_si())), stars);
    }
  }
  return {};
}

}  // namespace

MaterializedReduction materialize(const ReductionBlueprint& bp, long long cap) {
  BigInt total = 0;
  for (const auto& f : bp.factors) total += f.size;
  if (total > to_big(cap))
    throw CapExceeded("blueprint with " + total.get_str() + " vertices exceeds materialization cap " +
                      std::to_string(cap));
  BigInt edges = 0;
  for (auto [a, b] : bp.adjacency) edges += bp.factors[a].size * bp.factors[b].size;
  if (edges > to_big(kMaxMaterializedEdges))
    throw CapExceeded("blueprint with " + edges.get_str() + " join edges exceeds materialization cap");

  const int n = static_cast<int>(total.get_si());
  MaterializedReduction out;
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<Vertex> start;
  Vertex next = 0;
  for (const auto& f : bp.factors) {
    Graph g = factor_graph(f, cap);
    start.push_back(next);
    for (auto [u, v] : g.edges()) e.emplace_back(next + u, next + v);
    VertexSet block(n);
    for (Vertex v = 0; v < g.n(); ++v) block.insert(next + v);
    out.factor_vertices.push_back(block);
    next += g.n();
  }
  for (auto [a, b] : bp.adjacency)
    out.factor_vertices[a].for_each([&](Vertex u) { out.factor_vertices[b].for_each([&](Vertex v) { e.emplace_back(u, v); }); });
  out.graph = Graph(n, e);
  out.q = bp.scalar("q");
  out.beta = bp.scalar("beta");
  return out;
}

VertexSet materialize_witness(const ReductionBlueprint& bp, const MaterializedReduction& m, const ReductionWitness& w) {
  if (w.chi.size() != bp.factors.size()) throw std::invalid_argument("witness does not match the factor roster");
  VertexSet x(m.graph.n());
  for (std::size_t f = 0; f < bp.factors.size(); ++f) {
    const Factor& fc = bp.factors[f];
    const VertexSet& block = m.factor_vertices[f];
    long long take = w.chi[f].get_si();
    auto sub = induced_subgraph(m.graph, block);
    VertexSet local(sub.graph.n());
    switch (fc.kind) {
      case FactorKind::Edgeless:
        for (Vertex v = 0; v < take; ++v) local.insert(v);
        break;
      case FactorKind::DeletionStars: local = stars_deletion_set(sub.graph, static_cast<int>(take)); break;
      case FactorKind::RetentionStars: {
        // Isolated padding and leaves first, then centres of the smallest stars.
        std::vector<Vertex> order;
        std::vector<std::pair<int, Vertex>> centers;
        for (Vertex v = 0; v < sub.graph.n(); ++v) {
          if (sub.graph.degree(v) <= 1) {
            bool leaf_of_edge = sub.graph.degree(v) == 1 && sub.graph.degree(sub.graph.neighbors(v)[0]) == 1 &&
                                sub.graph.neighbors(v)[0] < v;
            if (!leaf_of_edge) {
              order.push_back(v);
              continue;
            }
          }
          centers.emplace_back(sub.graph.degree(v), v);
        }
        std::sort(centers.begin(), centers.end());
        for (auto [d, v] : centers) order.push_back(v);
        for (long long i = 0; i < take; ++i) local.insert(order[i]);
        break;
      }
    }
    x |= lift(sub, local, m.graph.n());
  }
  return x;
}

}  // namespace modcard
