#include "mindeg/conflict.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mindeg/errors.hpp"

namespace mindeg {

namespace {

// Dyadic buckets i >= 1 with 2^(i-1) <= s <= 2^i. Exact powers of two
// belong to two buckets.
std::vector<std::size_t> buckets_of(std::size_t s) {
  if (s == 1) return {1};
  std::size_t i = 0;
  while ((std::size_t{1} << i) < s) ++i;
  if ((std::size_t{1} << i) == s) return {i, i + 1};
  return {i};
}

} // namespace

Collection build_collection(std::span<const MaximalGoodSet> sets, std::size_t n, std::size_t k) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (n < 2) throw PreconditionError("collection needs n >= 2");
  std::size_t covered = 0;
  for (const auto &c : sets) covered += c.vertices.size();
  if ((2 * k + 2) * covered < n)
    throw PreconditionError("maximal good sets cover fewer than n/(2k+2) vertices; use the few-degree-k fallback");

  std::map<std::size_t, std::size_t> totals;
  for (const auto &c : sets)
    for (std::size_t i : buckets_of(c.vertices.size())) totals[i] += c.vertices.size();
  std::size_t best = 0, best_total = 0;
  for (auto [i, total] : totals)
    if (total > best_total) {
      best = i;
      best_total = total;
    }

  Collection coll;
  coll.bucket_index = best;
  const std::size_t lo = std::size_t{1} << (best - 1), hi = std::size_t{1} << best;
  for (const auto &c : sets)
    if (c.vertices.size() >= lo && c.vertices.size() <= hi) coll.members.push_back(c);
  std::sort(coll.members.begin(), coll.members.end(),
            [](const auto &a, const auto &b) { return a.vertices.front() < b.vertices.front(); });
  coll.total_size = best_total;
  if (coll.total_size >= n) {
    std::size_t drop = 0;
    for (std::size_t j = 1; j < coll.members.size(); ++j)
      if (coll.members[j].vertices.size() >= coll.members[drop].vertices.size()) drop = j;
    coll.dropped_size = coll.members[drop].vertices.size();
    coll.total_size -= coll.dropped_size;
    coll.members.erase(coll.members.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  const double floor_total = static_cast<double>(n) / ((2.0 * k + 2.0) * std::log2(static_cast<double>(n)));
  if (static_cast<double>(coll.total_size) < floor_total * (1.0 - kBoundSlack) || coll.total_size >= n)
    throw ClaimViolation("dyadic collection bounds", "total " + std::to_string(coll.total_size) + " outside [" +
                                                         std::to_string(floor_total) + ", " + std::to_string(n) + ")");
  return coll;
}

NeighborFamilies neighbor_families(const Graph &g, const Collection &coll, const VertexSet &s, std::size_t k) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(g.vertex_count(), kNone);
  for (std::uint32_t j = 0; j < coll.members.size(); ++j)
    for (Vertex v : coll.members[j].vertices) owner[v] = j;

  NeighborFamilies out;
  for (Vertex v : s) {
    if (v >= g.vertex_count()) throw PreconditionError("vertex out of range");
    if (owner[v] != kNone) throw PreconditionError("vertex " + std::to_string(v) + " lies inside a collection member");
    std::vector<std::uint32_t> fam;
    for (Vertex u : g.neighbors(v))
      if (owner[u] != kNone) fam.push_back(owner[u]);
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    const bool cut = fam.size() > k + 1;
    if (cut) fam.resize(k + 1);
    out.vertices.push_back(v);
    out.families.push_back(std::move(fam));
    out.truncated.push_back(cut ? 1 : 0);
  }
  return out;
}

ConflictGraph build_conflict_graph(const Collection &coll, const NeighborFamilies &families) {
  ConflictGraph a;
  a.vertex_count = static_cast<std::uint32_t>(coll.members.size());
  for (const auto &fam : families.families)
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) a.edges.emplace_back(fam[i], fam[j]);
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  return a;
}

std::vector<std::uint32_t> greedy_independent_set(const ConflictGraph &a) {
  const std::uint32_t m = a.vertex_count;
  std::vector<std::vector<std::uint32_t>> adj(m);
  for (auto [u, v] : a.edges) {
    if (u >= m || v >= m || u == v) throw PreconditionError("malformed conflict edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto &nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  std::vector<std::size_t> deg(m);
  std::vector<char> gone(m, 0);
  std::set<std::pair<std::size_t, std::uint32_t>> queue;
  for (std::uint32_t v = 0; v < m; ++v) {
    deg[v] = adj[v].size();
    queue.emplace(deg[v], v);
  }
  std::vector<std::uint32_t> chosen;
  while (!queue.empty()) {
    const std::uint32_t v = queue.begin()->second;
    chosen.push_back(v);
    std::vector<std::uint32_t> closed{v};
    for (std::uint32_t u : adj[v])
      if (!gone[u]) closed.push_back(u);
    for (std::uint32_t x : closed) gone[x] = 1;
    for (std::uint32_t x : closed) {
      queue.erase({deg[x], x});
      for (std::uint32_t y : adj[x]) {
        if (gone[y]) continue;
        queue.erase({deg[y], y});
        queue.emplace(--deg[y], y);
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

double turan_bound(std::size_t m, std::size_t e) {
  if (m == 0) return 0.0;
  const double md = static_cast<double>(m);
  return md * md / (2.0 * static_cast<double>(e) + md);
}

} // namespace mindeg
