// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mindeg/conflict.hpp"
#include "mindeg/cover.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/generate.hpp"
#include "mindeg/goodset.hpp"
#include "mindeg/oracle.hpp"
#include "mindeg/pipeline.hpp"
#include "mindeg/random.hpp"
#include "support.hpp"

using namespace mindeg;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string summary;
};

int failures = 0;

void criterion(int id, const char *title, double limit_s, const std::function<Outcome()> &body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool ok = o.passed && secs <= limit_s;
  if (!ok) ++failures;
  std::printf("criterion %d %s %s: %s; %.2f s (limit %.0f s)\n", id, ok ? "PASS" : "FAIL", title, o.summary.c_str(),
              secs, limit_s);
  std::fflush(stdout);
}

std::string str(std::size_t x) { return std::to_string(x); }

// Edges of K_a + C_b counted directly.
std::int64_t wheel_edges(std::int64_t k, std::int64_t n) {
  const std::int64_t a = k - 2, b = n - a;
  return a * (a - 1) / 2 + a * b + b;
}

struct Instance {
  Graph g;
  std::size_t k;
};

// Criterion-3 corpus: half wheel-plus-one, half uniform random with
// t_k(n)+1 to t_k(n)+3 edges.
std::vector<Instance> soundness_corpus() {
  std::vector<Instance> out;
  out.reserve(10000);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const std::size_t k = 2 + i % 3;
    const std::size_t n = k + 3 + (i / 3) % (38 - k);
    if (i % 2 == 0) {
      out.push_back({gen_extremal_plus_one(k, n, 7000 + i), k});
    } else {
      const auto t = static_cast<std::size_t>(t_threshold(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)));
      const auto m = std::min(n * (n - 1) / 2, t + 1 + (i / 7) % 3);
      out.push_back({gen_random_with_edges(n, m, 9000 + i), k});
    }
  }
  return out;
}

// Graphs whose k-core has many degree-k connectors hanging off a few hubs;
// these exercise the main branch, which the corpus above rarely reaches.
std::vector<Instance> hub_corpus() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; out.size() < 2000; ++seed) {
    const std::size_t k = 2 + seed % 3;
    const auto r = static_cast<Vertex>(k + 1 + seed % 6);
    const auto m = static_cast<Vertex>(std::min<std::size_t>(40 - r, (k - 1) * r + 2 + seed % 9));
    Graph g = hub_graph(k, r, m, 30000 + seed);
    if (static_cast<std::int64_t>(g.edge_count()) < t_threshold(k, g.vertex_count()) + 1) continue;
    out.push_back({std::move(g), k});
  }
  return out;
}

std::vector<Instance> corpus3;

Outcome c1() {
  std::size_t count = 0, bad = 0;
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t n = k + 2; n <= 500; ++n) {
      Graph w = gen_wheel(k, n);
      ++count;
      const auto e = static_cast<std::int64_t>(w.edge_count());
      const auto t = t_threshold(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n));
      if (e != t || e != wheel_edges(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)) ||
          w.min_degree() != k || w.vertex_count() != n)
        ++bad;
    }
  return {bad == 0, str(count) + " wheels, " + str(bad) + " mismatches"};
}

Outcome c2() {
  std::size_t count = 0, bad = 0;
  OracleBudget budget;
  budget.max_vertices = 12;
  for (std::size_t k = 3; k <= 5; ++k)
    for (std::size_t n = k + 2; n <= 12; ++n) {
      ++count;
      auto best = min_order_mindeg_subgraph(gen_wheel(k, n), k, budget);
      if (!best || best->size() != n) ++bad;
    }
  return {bad == 0, str(count) + " wheels, " + str(bad) + " with a proper min-degree-k induced subgraph"};
}

Outcome c3() {
  corpus3 = soundness_corpus();
  std::size_t bad = 0;
  for (const auto &inst : corpus3) {
    if (static_cast<std::int64_t>(inst.g.edge_count()) < t_threshold(inst.k, inst.g.vertex_count()) + 1) {
      ++bad;
      continue;
    }
    auto r = extract(inst.g, inst.k);
    if (!naive_min_degree(inst.g, r.subgraph, inst.k)) ++bad;
  }
  return {bad == 0, str(corpus3.size()) + " instances, " + str(bad) + " failures"};
}

Outcome c4() {
  constexpr std::size_t n = std::size_t{1} << 20;
  std::string summary;
  bool ok = true;
  auto one = [&](const char *name, const Graph &g, std::size_t k, std::size_t need) {
    const auto t0 = Clock::now();
    auto r = extract(g, k);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool good = naive_min_degree(g, r.subgraph, k) && r.subgraph.size() <= n - need && secs <= 120.0;
    ok = ok && good;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s%s k=%zu output %zu (need <= n-%zu, removed %zu, %s, %.1f s)",
                  summary.empty() ? "" : "; ", name, k, r.subgraph.size(), need, n - r.subgraph.size(),
                  to_string(r.branch).c_str(), secs);
    summary += buf;
  };
  {
    Rng rng(2020);
    Vertex u = 0, v = 0;
    while (u == v || (u + 1) % n == v || (v + 1) % n == u) {
      u = static_cast<Vertex>(uniform_below(rng, n));
      v = static_cast<Vertex>(uniform_below(rng, n));
    }
    one("cycle+chord", with_edge(cycle(static_cast<Vertex>(n)), u, v), 2,
        static_cast<std::size_t>(std::ceil(static_cast<double>(n) / (4.0 * 243.0 * 20.0))));
  }
  one("wheel+chord", gen_extremal_plus_one(3, n, 2021), 3, 13);
  return {ok, summary};
}

Outcome c5() {
  std::size_t runs = 0, violations = 0, from_corpus = 0;
  std::string first;
  auto note = [&](bool cond, const std::string &what) {
    if (cond) return;
    ++violations;
    if (first.empty()) first = what;
  };
  auto check = [&](const Instance &inst) {
    auto r = extract(inst.g, inst.k);
    if (r.branch != Branch::main) return false;
    ++runs;
    const std::size_t k = inst.k;
    const Graph core = induced_subgraph(inst.g, r.core);
    const double n1 = static_cast<double>(r.core.size());
    std::size_t total = 0, lo = SIZE_MAX, hi = 0;
    for (const auto &c : r.collection) {
      total += c.vertices.size();
      lo = std::min(lo, c.vertices.size());
      hi = std::max(hi, c.vertices.size());
    }
    const double alpha = 1.0 / (2.0 * k + 2.0);
    note(static_cast<double>(total) >= alpha * n1 / std::log2(n1) * (1 - kBoundSlack) && total < r.core.size(),
         "collection total");
    note(hi <= 2 * lo, "dyadic ratio");
    if (r.cover) note(r.cover->cover_set.size() <= 2 * r.collection.size() + k * k, "cover set size");
    const auto k1 = static_cast<std::size_t>(k + 1);
    note(r.removed.size() * k1 * k1 * k1 * k1 >= r.collection.size(), "independent set size");
    for (const auto &c : r.removed) {
      std::vector<Vertex> local;
      for (Vertex v : c.vertices) local.push_back(static_cast<Vertex>(r.core.index_of(v)));
      note(edges_meeting(core, VertexSet(local)) <= (k - 1) * c.vertices.size() + 1, "removed edge bound");
    }
    for (std::size_t i = 0; i < r.removed.size(); ++i)
      for (std::size_t j = i + 1; j < r.removed.size(); ++j)
        for (Vertex u : r.removed[i].vertices) {
          note(!r.removed[j].vertices.contains(u), "removed sets disjoint");
          for (Vertex w : inst.g.neighbors(u)) note(!r.removed[j].vertices.contains(w), "removed sets non-adjacent");
        }
    note(verify_certificate(inst.g, k, r).ok(), "certificate");
    return true;
  };
  for (const auto &inst : corpus3) from_corpus += check(inst) ? 1 : 0;
  for (const auto &inst : hub_corpus()) check(inst);
  return {runs > 0 && violations == 0, str(runs) + " main-branch runs (" + str(from_corpus) +
                                           " from the soundness corpus, rest from hub graphs), " + str(violations) +
                                           " violations" + (first.empty() ? "" : ", first: " + first)};
}

// H with empty k-core: random degenerate construction or G(n,p) rejection.
Graph coreless(std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<Vertex>(1 + uniform_below(rng, 12));
  if (seed % 2 == 0) {
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) {
      std::vector<Vertex> prev(v);
      for (Vertex u = 0; u < v; ++u) prev[u] = u;
      shuffle(prev, rng);
      const auto d = uniform_below(rng, std::min<std::uint64_t>(k - 1, v) + 1);
      for (std::size_t j = 0; j < d; ++j) e.emplace_back(prev[j], v);
    }
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    shuffle(perm, rng);
    for (auto &[a, b] : e) a = perm[a], b = perm[b];
    return Graph::from_edges(n, e);
  }
  for (std::uint64_t t = 0;; ++t) {
    Graph g = gnp(n, 0.1 + 0.05 * static_cast<double>(k) * uniform_unit(rng), seed * 1000 + t);
    if (naive_core(g, k).empty()) return g;
  }
}

Outcome c6() {
  std::size_t graphs = 0, covers = 0, bad = 0;
  std::string first;
  auto note = [&](bool cond, const std::string &what) {
    if (cond) return;
    ++bad;
    if (first.empty()) first = what;
  };
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::size_t k = 2 + i % 2;
    Graph h = coreless(k, 40000 + i);
    ++graphs;
    auto cert = build_cover_set(h, k);
    const auto ks = static_cast<std::int64_t>(k);
    note(static_cast<std::int64_t>(cert.cover_set.size()) <= phi(h, k), "|S| <= phi");
    // Walk the peel order and check the phi step identity at every level.
    VertexSet rest = VertexSet::range(h.vertex_count());
    for (Vertex v : cert.peel_order) {
      const Graph cur = induced_subgraph(h, rest);
      const auto lv = static_cast<Vertex>(rest.index_of(v));
      const auto d = static_cast<std::int64_t>(cur.degree(lv));
      note(d <= ks - 1, "peel degree");
      std::int64_t low_nbrs = 0;
      for (Vertex w : cur.neighbors(lv)) low_nbrs += static_cast<std::int64_t>(cur.degree(w)) <= ks - 1 ? 1 : 0;
      const VertexSet next = set_difference(rest, VertexSet{v});
      const std::int64_t drop = phi(cur, k) - phi(induced_subgraph(h, next), k);
      note(drop == (ks - 1) - d + low_nbrs, "phi step identity");
      note(drop >= 0, "phi step non-negative");
      rest = next;
    }
    OracleBudget b;
    b.max_vertices = 12;
    b.trial_count = 100;
    b.seed = i;
    auto res = random_cover_check(h, cert.cover_set, k, b);
    covers += res.trials;
    note(res.passed() && res.trials == 100, "cover check");
  }
  return {bad == 0, str(graphs) + " graphs, " + str(covers) + " cover checks, " + str(bad) + " failures" +
                        (first.empty() ? "" : ", first: " + first)};
}

Outcome c7() {
  std::size_t bad = 0;
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    ConflictGraph a;
    a.vertex_count = static_cast<std::uint32_t>(1 + uniform_below(rng, 200));
    const double p = uniform_unit(rng) * (i % 4 == 0 ? 0.5 : 0.08);
    for (std::uint32_t u = 0; u < a.vertex_count; ++u)
      for (std::uint32_t v = u + 1; v < a.vertex_count; ++v)
        if (uniform_unit(rng) < p) a.edges.emplace_back(u, v);
    auto is = greedy_independent_set(a);
    const double m = a.vertex_count, e = static_cast<double>(a.edges.size());
    const double need = m / (2.0 * e / m + 1.0);
    bool indep = true;
    for (auto [u, v] : a.edges)
      if (std::binary_search(is.begin(), is.end(), u) && std::binary_search(is.begin(), is.end(), v)) indep = false;
    if (!indep || static_cast<double>(is.size()) < need * (1 - kBoundSlack)) ++bad;
  }
  return {bad == 0, "1000 conflict graphs, " + str(bad) + " failures"};
}

Outcome c8() {
  std::size_t checks = 0, bad = 0;
  OracleBudget b;
  b.max_vertices = 12;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto n = static_cast<Vertex>(1 + i % 12);
    Graph g = gnp(n, 0.1 + 0.06 * static_cast<double>(i % 11), 50000 + i);
    for (std::size_t k = 2; k <= 4; ++k) {
      std::vector<VertexSet> engine;
      for (const auto &m : maximal_good_sets(g, k)) engine.push_back(m.vertices);
      b.seed = i;
      ++checks;
      if (brute_good_closure(g, k, b) != engine) ++bad;
      for (std::uint64_t s = 0; s < 100; ++s) {
        std::vector<VertexSet> shuffled;
        for (const auto &m : maximal_good_sets(g, k, EngineOptions{i * 100 + s})) shuffled.push_back(m.vertices);
        ++checks;
        if (shuffled != engine) ++bad;
      }
    }
  }
  return {bad == 0, "1000 graphs x k=2..4, " + str(checks) + " family comparisons, " + str(bad) + " mismatches"};
}

} // namespace

int main() {
  criterion(1, "generator/threshold exactness", 10, c1);
  criterion(2, "wheel extremality", 300, c2);
  criterion(3, "end-to-end soundness", 600, c3);
  criterion(4, "bound at n=2^20", 240, c4);
  criterion(5, "claim checks on main-branch runs", 600, c5);
  criterion(6, "cover set suite", 600, c6);
  criterion(7, "greedy independent set bound", 60, c7);
  criterion(8, "closure oracle equivalence", 600, c8);
  std::printf("acceptance: %s\n", failures == 0 ? "all criteria passed" : (str(failures) + " failed").c_str());
  return failures == 0 ? 0 : 1;
}
