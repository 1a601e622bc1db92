#pragma once

// Small graph builders and slow reference implementations used as test
// oracles. Nothing here calls into the code under test beyond Graph itself.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/random.hpp"

namespace testing {

using mindeg::Edge;
using mindeg::Graph;
using mindeg::Vertex;
using mindeg::VertexSet;

inline Graph make(Vertex n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

inline Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

// Disjoint union, b's ids shifted by a's order.
inline Graph disjoint(const Graph &a, const Graph &b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), e);
}

inline Graph with_edge(const Graph &g, Vertex u, Vertex v) {
  std::vector<Edge> e = g.edges();
  e.emplace_back(u, v);
  return Graph::from_edges(g.vertex_count(), e);
}

// Hub 0 joined to the cycle 1..n-1, written out edge by edge.
inline Graph classic_wheel(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i + 1 < n ? i + 1 : 1);
  }
  return Graph::from_edges(n, e);
}

// Independent G(n, p) sampler.
inline Graph gnp(Vertex n, double p, std::uint64_t seed) {
  mindeg::Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (mindeg::uniform_unit(rng) < p) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// r hubs joined by a random tree, plus m connectors each adjacent to k
// distinct random hubs. Connectors have degree exactly k and are pairwise
// non-adjacent, so they form many small good sets.
inline Graph hub_graph(std::size_t k, Vertex r, Vertex m, std::uint64_t seed) {
  mindeg::Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex h = 1; h < r; ++h) e.emplace_back(static_cast<Vertex>(mindeg::uniform_below(rng, h)), h);
  for (Vertex i = 0; i < m; ++i) {
    std::vector<Vertex> hubs(r);
    for (Vertex h = 0; h < r; ++h) hubs[h] = h;
    mindeg::shuffle(hubs, rng);
    for (std::size_t j = 0; j < k; ++j) e.emplace_back(hubs[j], r + i);
  }
  return Graph::from_edges(r + m, e);
}

inline std::size_t degree_in(const Graph &g, Vertex v, const std::vector<char> &in) {
  std::size_t d = 0;
  for (Vertex u : g.neighbors(v)) d += in[u] ? 1 : 0;
  return d;
}

// Naive k-core: rescan all vertices until nothing changes.
inline VertexSet naive_core(const Graph &g, std::size_t k) {
  std::vector<char> in(g.vertex_count(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (in[v] && degree_in(g, v, in) < k) {
        in[v] = 0;
        changed = true;
      }
  }
  std::vector<Vertex> ids;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (in[v]) ids.push_back(v);
  return VertexSet(ids);
}

inline bool naive_min_degree(const Graph &g, const VertexSet &w, std::size_t k) {
  if (w.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : w) in[v] = 1;
  for (Vertex v : w)
    if (degree_in(g, v, in) < k) return false;
  return true;
}

// Smallest order of a nonempty subset inducing min degree >= k, by trying
// every bitmask. 0 when none exists. n <= 20.
inline std::size_t naive_min_order(const Graph &g, std::size_t k) {
  const Vertex n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (best && size >= best) continue;
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) ids.push_back(v);
    if (naive_min_degree(g, VertexSet(ids), k)) best = size;
  }
  return best;
}

inline std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

} // namespace testing
