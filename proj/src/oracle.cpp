#include "mindeg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>

#include "mindeg/cover.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/random.hpp"

namespace mindeg {

std::size_t OracleBudget::default_max_vertices() {
  if (const char *env = std::getenv("MINDEG_ORACLE_BUDGET")) {
    char *end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20;
}

namespace {

using Mask = std::uint64_t;

void check_budget(std::size_t n, const OracleBudget &budget, const char *what) {
  if (n > budget.max_vertices || n > kOracleVertexLimit)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds budget of " +
                         std::to_string(std::min(budget.max_vertices, kOracleVertexLimit)));
}

std::vector<Mask> adjacency_masks(const Graph &g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= Mask{1} << u;
  return adj;
}

int popcount(Mask m) { return std::popcount(m); }

Mask above(std::size_t i, std::size_t m) {
  const Mask all = m == 64 ? ~Mask{0} : (Mask{1} << m) - 1;
  return i + 1 >= 64 ? 0 : all & ~((Mask{1} << (i + 1)) - 1);
}

struct SubsetSearch {
  const std::vector<Mask> &adj;
  std::size_t m;
  int k;

  bool feasible(Mask chosen, std::size_t last, std::size_t slots) const {
    const Mask later = above(last, m);
    for (Mask rest = chosen; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int have = popcount(adj[v] & chosen);
      const int could = std::min<int>(popcount(adj[v] & later), static_cast<int>(slots));
      if (have + could < k) return false;
    }
    return true;
  }

  // Lexicographically first `size`-subset, chosen in increasing order.
  bool run(std::size_t start, Mask chosen, std::size_t count, std::size_t size, Mask *out) const {
    if (count == size) {
      *out = chosen;
      return true;
    }
    const std::size_t left = size - count;
    for (std::size_t i = start; i + left <= m; ++i) {
      const Mask next = chosen | (Mask{1} << i);
      if (!feasible(next, i, left - 1)) continue;
      if (run(i + 1, next, count + 1, size, out)) return true;
    }
    return false;
  }
};

} // namespace

std::optional<VertexSet> min_order_mindeg_subgraph(const Graph &g, std::size_t k, const OracleBudget &budget) {
  const VertexSet core = k_core(g, k);
  if (core.empty()) return std::nullopt;
  check_budget(core.size(), budget, "min_order_mindeg_subgraph");
  const Graph h = induced_subgraph(g, core);
  const std::vector<Mask> adj = adjacency_masks(h);
  const SubsetSearch search{adj, core.size(), static_cast<int>(k)};
  for (std::size_t size = k + 1; size <= core.size(); ++size) {
    Mask found = 0;
    if (!search.run(0, 0, 0, size, &found)) continue;
    std::vector<Vertex> ids;
    for (Mask rest = found; rest; rest &= rest - 1) ids.push_back(core[std::countr_zero(rest)]);
    return VertexSet::from_sorted(std::move(ids));
  }
  throw ClaimViolation("oracle search", "nonempty k-core but no subset qualified");
}

std::vector<VertexSet> brute_good_closure(const Graph &g, std::size_t k, const OracleBudget &budget) {
  const std::size_t n = g.vertex_count();
  check_budget(n, budget, "brute_good_closure");
  const std::vector<Mask> adj = adjacency_masks(g);
  Rng rng(budget.seed);

  std::vector<Mask> sets;
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;

  bool changed = true;
  while (changed) {
    changed = false;
    shuffle(order, rng);
    // Rule 1.
    for (Vertex v : order) {
      if (g.degree(v) != k) continue;
      const bool covered = std::any_of(sets.begin(), sets.end(), [&](Mask s) { return (s >> v) & 1; });
      if (!covered) {
        sets.push_back(Mask{1} << v);
        changed = true;
      }
    }
    shuffle(sets, rng);
    // Rule 2.
    for (Mask &s : sets)
      for (Vertex v : order)
        if (!((s >> v) & 1) && popcount(adj[v] & ~s) <= static_cast<int>(k) - 1) {
          s |= Mask{1} << v;
          changed = true;
        }
    // Rule 3: touching sets share a vertex or are joined by an edge.
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size();) {
        Mask reach = sets[i];
        for (Mask rest = sets[i]; rest; rest &= rest - 1) reach |= adj[std::countr_zero(rest)];
        if (reach & sets[j]) {
          sets[i] |= sets[j];
          sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          j = i + 1;
        } else {
          ++j;
        }
      }
  }

  std::vector<VertexSet> out;
  for (Mask s : sets) {
    std::vector<Vertex> ids;
    for (Mask rest = s; rest; rest &= rest - 1) ids.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    out.push_back(VertexSet::from_sorted(std::move(ids)));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet &a, const VertexSet &b) { return a.front() < b.front(); });
  return out;
}

std::string CoverCounterexample::serialize() const {
  return format_edge_list(cover, "cover counterexample seed=" + std::to_string(seed) + " trial=" + std::to_string(trial));
}

Graph random_cover(const Graph &h, const VertexSet &s, std::size_t k, std::uint64_t seed, std::size_t trial) {
  const std::size_t vh = h.vertex_count();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  Rng rng(seq);

  std::vector<std::vector<Vertex>> adj(vh);
  for (Vertex v = 0; v < vh; ++v) adj[v].assign(h.neighbors(v).begin(), h.neighbors(v).end());
  auto adjacent = [&](Vertex a, Vertex b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
  auto connect = [&](Vertex a, Vertex b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto fresh = [&] {
    adj.emplace_back();
    return static_cast<Vertex>(adj.size() - 1);
  };
  // Vertices that must end with degree >= k: S and everything new.
  auto constrained = [&](Vertex v) { return v >= vh || s.contains(v); };
  const std::size_t fresh_cap = vh + k + 2;

  if (trial > 0) {
    const std::size_t extra_vertices = uniform_below(rng, 4);
    for (std::size_t i = 0; i < extra_vertices; ++i) fresh();
    const std::size_t extra_edges = uniform_below(rng, vh + 2);
    for (std::size_t i = 0; i < extra_edges && adj.size() > 1; ++i) {
      const auto a = static_cast<Vertex>(uniform_below(rng, adj.size()));
      const auto b = static_cast<Vertex>(uniform_below(rng, adj.size()));
      if (a != b && !adjacent(a, b)) connect(a, b);
    }
  }

  for (;;) {
    Vertex v = 0;
    bool found = false;
    for (Vertex u = 0; u < adj.size(); ++u)
      if (constrained(u) && adj[u].size() < k) {
        v = u;
        found = true;
        break;
      }
    if (!found) break;
    std::vector<Vertex> options;
    for (Vertex u = 0; u < adj.size(); ++u)
      if (u != v && !adjacent(u, v)) options.push_back(u);
    Vertex partner;
    if (options.empty() || (trial > 0 && adj.size() < fresh_cap && uniform_below(rng, 4) == 0)) {
      partner = fresh();
    } else if (trial == 0) {
      // Prefer partners that also still need edges.
      auto it = std::find_if(options.begin(), options.end(),
                             [&](Vertex u) { return constrained(u) && adj[u].size() < k; });
      partner = it != options.end() ? *it : options.front();
    } else {
      partner = options[uniform_below(rng, options.size())];
    }
    connect(v, partner);
  }

  std::vector<Edge> edges;
  for (Vertex a = 0; a < adj.size(); ++a)
    for (Vertex b : adj[a])
      if (a < b) edges.emplace_back(a, b);
  return Graph::from_edges(static_cast<Vertex>(adj.size()), edges);
}

CoverCheckResult random_cover_check(const Graph &h, const VertexSet &s, std::size_t k, const OracleBudget &budget) {
  check_budget(h.vertex_count(), budget, "random_cover_check");
  if (!s.empty() && s.back() >= h.vertex_count()) throw PreconditionError("S is not a subset of V(H)");
  CoverCheckResult res;
  for (std::size_t t = 0; t < budget.trial_count; ++t) {
    Graph cover = random_cover(h, s, k, budget.seed, t);
    ++res.trials;
    if (!is_cover(cover, h, s, k)) throw ClaimViolation("cover generator", "trial " + std::to_string(t) + " is not a cover");
    if (k_core(cover, k).empty()) {
      res.counterexample = CoverCounterexample{std::move(cover), t, budget.seed};
      break;
    }
  }
  return res;
}

} // namespace mindeg
