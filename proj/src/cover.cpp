#include "mindeg/cover.hpp"

#include <numeric>

#include "mindeg/errors.hpp"

namespace mindeg {

std::int64_t phi(const Graph &h, std::size_t k) {
  const auto km1 = static_cast<std::int64_t>(k) - 1;
  std::int64_t value = 2 * km1 * h.vertex_count() - 2 * static_cast<std::int64_t>(h.edge_count());
  for (Vertex w = 0; w < h.vertex_count(); ++w) {
    const auto d = static_cast<std::int64_t>(h.degree(w));
    if (d <= km1) value -= km1 - d;
  }
  return value;
}

CoverCertificate build_cover_set(const Graph &h, std::size_t k) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (h.vertex_count() == 0) throw PreconditionError("cover set needs a graph with at least one vertex");
  PeelResult peeled = peel(h, k);
  if (!peeled.core.empty()) throw PreconditionError("graph has a nonempty k-core");

  const std::size_t m = peeled.order.size();
  const auto km1 = static_cast<std::int64_t>(k) - 1;
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  std::vector<char> present(h.vertex_count(), 0);
  std::vector<char> in_s(h.vertex_count(), 0);

  // Single remaining vertex: S = {it}, phi = k-1.
  const Vertex last = peeled.order.back();
  present[last] = 1;
  in_s[last] = 1;
  std::size_t s_size = 1;
  std::int64_t phi_level = km1;

  for (std::size_t i = m - 1; i-- > 0;) {
    const Vertex v = peeled.order[i];
    const std::size_t dv = peeled.removal_degree[i];
    if (dv + 1 > k) throw ClaimViolation("peel order", "vertex " + std::to_string(v) + " removed with degree " + std::to_string(dv));

    bool neighbor_in_s = false;
    std::size_t low_neighbors = 0;
    std::size_t expelled = 0;
    present[v] = 1;
    deg[v] = dv;
    for (Vertex u : h.neighbors(v)) {
      if (!present[u] || u == v) continue;
      neighbor_in_s = neighbor_in_s || in_s[u];
      if (++deg[u] + 1 <= k) ++low_neighbors;
    }
    // |S_i| is compared against phi(H_i) = phi(H_{i+1}) + (k-1) - deg v + |low neighbors|.
    const std::int64_t step = km1 - static_cast<std::int64_t>(dv) + static_cast<std::int64_t>(low_neighbors);
    if (step < 0) throw ClaimViolation("phi recurrence", "negative increment at vertex " + std::to_string(v));
    phi_level += step;

    const bool take_v = dv + 2 <= k || neighbor_in_s;
    for (Vertex u : h.neighbors(v)) {
      if (present[u] && in_s[u] && deg[u] == k) {
        in_s[u] = 0;
        --s_size;
        ++expelled;
      }
    }
    if (take_v) {
      in_s[v] = 1;
      ++s_size;
      if (dv + 1 == k && low_neighbors == 0 && expelled == 0)
        throw ClaimViolation("cover case split",
                             "vertex " + std::to_string(v) + " joined S without expelling a degree-k neighbor");
    }
    if (static_cast<std::int64_t>(s_size) > phi_level)
      throw ClaimViolation("cover set size", "|S| = " + std::to_string(s_size) + " exceeds phi = " + std::to_string(phi_level));
  }

  CoverCertificate cert;
  std::vector<Vertex> s;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (in_s[v]) s.push_back(v);
  cert.cover_set = VertexSet::from_sorted(std::move(s));
  cert.peel_order = std::move(peeled.order);
  cert.phi_value = phi_level;
  if (phi_level != phi(h, k)) throw ClaimViolation("phi recurrence", "accumulated phi disagrees with direct evaluation");
  return cert;
}

bool is_cover(const Graph &cover, const Graph &h, const VertexSet &s, std::size_t k, std::span<const Vertex> embedding) {
  if (embedding.size() != h.vertex_count()) throw PreconditionError("embedding size does not match H");
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> preimage(cover.vertex_count(), kNone);
  for (Vertex i = 0; i < h.vertex_count(); ++i) {
    const Vertex x = embedding[i];
    if (x >= cover.vertex_count()) throw PreconditionError("embedding target out of range");
    if (preimage[x] != kNone) throw PreconditionError("embedding is not injective");
    preimage[x] = i;
  }
  for (auto [u, v] : h.edges())
    if (!cover.has_edge(embedding[u], embedding[v])) return false;
  for (Vertex x = 0; x < cover.vertex_count(); ++x) {
    if (cover.degree(x) + 1 > k) continue;
    if (preimage[x] == kNone || s.contains(preimage[x])) return false;
  }
  return true;
}

bool is_cover(const Graph &cover, const Graph &h, const VertexSet &s, std::size_t k) {
  std::vector<Vertex> identity(h.vertex_count());
  std::iota(identity.begin(), identity.end(), Vertex{0});
  return is_cover(cover, h, s, k, identity);
}

} // namespace mindeg
