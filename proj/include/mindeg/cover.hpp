#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

// Output of build_cover_set.
//
// `cover_set` is the set S: any supergraph of H in which every vertex of
// degree <= k-1 comes from V(H) \ S has a nonempty k-core. `peel_order`
// lists every vertex of H; each has degree <= k-1 once its predecessors are
// gone. `phi_value` is phi(H), an upper bound on |S|.
struct CoverCertificate {
  VertexSet cover_set;
  std::vector<Vertex> peel_order;
  std::int64_t phi_value = 0;
};

// 2(k-1) v_H - 2 e_H - sum over vertices w of degree <= k-1 of (k-1-deg w).
std::int64_t phi(const Graph &h, std::size_t k);

// Builds S by peeling H one vertex at a time (lowest id of degree <= k-1)
// and reconstructing backwards with S = (S' + I_v) \ V_k, where I_v = {v}
// if deg(v) <= k-2 or v has a neighbor in S'. Requires an empty k-core and
// at least one vertex.
CoverCertificate build_cover_set(const Graph &h, std::size_t k);

// True iff `cover` contains `h` under `embedding` (h id -> cover id) and
// every vertex of `cover` with degree <= k-1 is the image of a vertex of h
// outside `s`. Throws PreconditionError on a non-injective embedding.
bool is_cover(const Graph &cover, const Graph &h, const VertexSet &s, std::size_t k,
              std::span<const Vertex> embedding);

// Identity embedding: h's vertex i is cover's vertex i.
bool is_cover(const Graph &cover, const Graph &h, const VertexSet &s, std::size_t k);

} // namespace mindeg
