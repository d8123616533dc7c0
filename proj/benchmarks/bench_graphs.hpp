#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "modcard/graph.hpp"

namespace bench {

// Disjoint cliques of random sizes in [1, max_size], n vertices in total, randomly labelled.
inline modcard::Graph clusters(int n, int max_size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<modcard::Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::pair<modcard::Vertex, modcard::Vertex>> e;
  for (int start = 0; start < n;) {
    int size = std::min<int>(n - start, std::uniform_int_distribution<int>(1, max_size)(rng));
    for (int a = start; a < start + size; ++a)
      for (int b = a + 1; b < start + size; ++b) e.emplace_back(label[a], label[b]);
    start += size;
  }
  return modcard::Graph(n, e);
}

// Complete join of two graphs; vertices of b follow those of a.
inline modcard::Graph join(const modcard::Graph& a, const modcard::Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  for (modcard::Vertex u = 0; u < a.n(); ++u)
    for (modcard::Vertex v = 0; v < b.n(); ++v) e.emplace_back(u, v + a.n());
  return modcard::Graph(a.n() + b.n(), e);
}

// Disjoint stars with up to max_leaves leaves each, n vertices in total.
inline modcard::Graph stars(int n, int max_leaves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<modcard::Vertex, modcard::Vertex>> e;
  for (int start = 0; start < n;) {
    int leaves = std::min<int>(n - start - 1, std::uniform_int_distribution<int>(0, max_leaves)(rng));
    for (int l = 1; l <= leaves; ++l) e.emplace_back(start, start + l);
    start += leaves + 1;
  }
  return modcard::Graph(n, e);
}

inline modcard::Graph gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<modcard::Vertex, modcard::Vertex>> e;
  for (modcard::Vertex u = 0; u < n; ++u)
    for (modcard::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return modcard::Graph(n, e);
}

// Replaces every vertex of h by `size` true twins (even index) or false twins (odd index).
inline modcard::Graph blow_up(const modcard::Graph& h, int size) {
  std::vector<std::pair<modcard::Vertex, modcard::Vertex>> e;
  auto at = [size](modcard::Vertex v, int i) { return v * size + i; };
  for (modcard::Vertex v = 0; v < h.n(); ++v)
    if (v % 2 == 0)
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) e.emplace_back(at(v, i), at(v, j));
  for (auto [u, v] : h.edges())
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) e.emplace_back(at(u, i), at(v, j));
  return modcard::Graph(h.n() * size, e);
}

}  // namespace bench
