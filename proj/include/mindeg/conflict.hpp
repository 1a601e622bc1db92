#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mindeg/goodset.hpp"
#include "mindeg/graph.hpp"

namespace mindeg {

// Maximal good sets whose sizes all lie in one dyadic range
// [2^(i-1), 2^i], covering at least n / ((2k+2) log2 n) vertices and fewer
// than n. Members are ordered by smallest vertex id.
struct Collection {
  std::size_t bucket_index = 0;
  std::vector<MaximalGoodSet> members;
  std::size_t total_size = 0;
  // Size of the member dropped to bring the total below n, if any.
  std::size_t dropped_size = 0;
};

// For each vertex s of S, the indices of collection members holding a
// neighbor of s, capped at k+1. `truncated[i]` records whether the cap cut
// the list for vertices[i].
struct NeighborFamilies {
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::uint32_t>> families;
  std::vector<char> truncated;
};

// Union of one clique per family, on collection indices.
struct ConflictGraph {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Picks the dyadic bucket with the largest total size (ties: smaller i);
// drops the largest member when the bucket covers all n vertices.
// Requires (2k+2) * sum |C| >= n over `sets`.
Collection build_collection(std::span<const MaximalGoodSet> sets, std::size_t n, std::size_t k);

// Requires S to avoid every member. Families are truncated to the k+1
// members with the smallest least vertex.
NeighborFamilies neighbor_families(const Graph &g, const Collection &coll, const VertexSet &s, std::size_t k);

ConflictGraph build_conflict_graph(const Collection &coll, const NeighborFamilies &families);

// Repeatedly takes a minimum-degree vertex (ties: smallest index) and
// deletes its closed neighborhood. Returns sorted indices.
std::vector<std::uint32_t> greedy_independent_set(const ConflictGraph &a);

// m / (2c + 1) with c = e/m; the size every greedy run must reach.
double turan_bound(std::size_t m, std::size_t e);

} // namespace mindeg
