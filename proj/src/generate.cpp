#include "mindeg/generate.hpp"

#include <unordered_set>
#include <vector>

#include "mindeg/errors.hpp"
#include "mindeg/random.hpp"

namespace mindeg {

std::string GenSpec::describe() const {
  std::string s = "gen kind=" + to_string(kind) + " n=" + std::to_string(n);
  if (kind == GenKind::random_fixed_edges) s += " m=" + std::to_string(m);
  else s += " k=" + std::to_string(k);
  if (kind != GenKind::wheel) s += " seed=" + std::to_string(seed);
  return s;
}

Graph gen_wheel(std::size_t k, std::size_t n) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (n == k + 1)
    throw PreconditionError("W(k-2, k+1) is the complete graph K_{k+1}; build it directly");
  if (n < k + 2) throw PreconditionError("wheel needs n >= k+2");
  const auto apex = static_cast<Vertex>(k - 2);
  const auto nv = static_cast<Vertex>(n);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < apex; ++a)
    for (Vertex b = a + 1; b < nv; ++b) edges.emplace_back(a, b);
  for (Vertex c = apex; c < nv; ++c) edges.emplace_back(c, c + 1 == nv ? apex : c + 1);
  return Graph::from_edges(nv, edges);
}

Graph gen_extremal_plus_one(std::size_t k, std::size_t n, std::uint64_t seed) {
  Graph wheel = gen_wheel(k, n);
  // Every non-edge joins two cycle vertices that are not cyclic neighbors.
  const auto apex = static_cast<Vertex>(k - 2);
  const std::uint64_t cycle = n - apex;
  if (cycle < 4) throw PreconditionError("wheel is complete; no non-edge to add");
  Rng rng(seed);
  Vertex u = 0, v = 0;
  do {
    u = apex + static_cast<Vertex>(uniform_below(rng, cycle));
    v = apex + static_cast<Vertex>(uniform_below(rng, cycle));
  } while (u == v || wheel.has_edge(u, v));
  std::vector<Edge> edges = wheel.edges();
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph gen_random_with_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
  if (m > pairs) throw PreconditionError("requested " + std::to_string(m) + " edges but only " + std::to_string(pairs) + " pairs exist");
  // Sample whichever of the edge set or its complement is smaller.
  const bool complement = m > pairs / 2;
  const std::uint64_t want = complement ? pairs - m : m;
  Rng rng(seed);
  std::unordered_set<std::uint64_t> picked;
  std::vector<Edge> sampled;
  while (sampled.size() < want) {
    auto u = static_cast<Vertex>(uniform_below(rng, n));
    auto v = static_cast<Vertex>(uniform_below(rng, n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (picked.insert(static_cast<std::uint64_t>(u) * n + v).second) sampled.emplace_back(u, v);
  }
  if (!complement) return Graph::from_edges(static_cast<Vertex>(n), sampled);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!picked.count(static_cast<std::uint64_t>(u) * n + v)) edges.emplace_back(u, v);
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph generate(const GenSpec &spec) {
  switch (spec.kind) {
  case GenKind::wheel: return gen_wheel(spec.k, spec.n);
  case GenKind::wheel_plus_one: return gen_extremal_plus_one(spec.k, spec.n, spec.seed);
  case GenKind::random_fixed_edges: return gen_random_with_edges(spec.n, spec.m, spec.seed);
  }
  throw PreconditionError("unknown generator kind");
}

GenKind parse_gen_kind(const std::string &name) {
  if (name == "wheel") return GenKind::wheel;
  if (name == "wheel-plus-one") return GenKind::wheel_plus_one;
  if (name == "random-fixed-edges" || name == "random") return GenKind::random_fixed_edges;
  throw PreconditionError("unknown generator kind '" + name + "'");
}

std::string to_string(GenKind kind) {
  switch (kind) {
  case GenKind::wheel: return "wheel";
  case GenKind::wheel_plus_one: return "wheel-plus-one";
  case GenKind::random_fixed_edges: return "random-fixed-edges";
  }
  return "unknown";
}

} // namespace mindeg
