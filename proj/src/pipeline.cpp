#include "mindeg/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "mindeg/errors.hpp"

namespace mindeg {

std::string to_string(Branch b) {
  switch (b) {
  case Branch::peeled_only: return "peeled-only";
  case Branch::large_good_set: return "large-good-set";
  case Branch::main: return "main";
  case Branch::lemma4_fallback: return "lemma4-fallback";
  case Branch::greedy_chain: return "greedy-chain";
  }
  return "unknown";
}

Branch parse_branch(const std::string &name) {
  for (Branch b : {Branch::peeled_only, Branch::large_good_set, Branch::main, Branch::lemma4_fallback,
                   Branch::greedy_chain})
    if (to_string(b) == name) return b;
  throw PreconditionError("unknown branch '" + name + "'");
}

std::string to_string(Strategy s) { return s == Strategy::theorem3 ? "theorem3" : "greedy-chain"; }

Strategy parse_strategy(const std::string &name) {
  if (name == "theorem3") return Strategy::theorem3;
  if (name == "greedy-chain") return Strategy::greedy_chain;
  throw PreconditionError("unknown strategy '" + name + "'");
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const CheckResult *VerificationReport::find(const std::string &name) const {
  for (const auto &c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

double log2d(std::size_t n) { return std::log2(static_cast<double>(n)); }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Local ids of `outer`'s induced subgraph back to parent ids.
VertexSet lift(const VertexSet &local, const VertexSet &outer) {
  std::vector<Vertex> ids;
  ids.reserve(local.size());
  for (Vertex v : local) ids.push_back(outer[v]);
  return VertexSet::from_sorted(std::move(ids));
}

VertexSet localize(const VertexSet &global, const VertexSet &outer) {
  std::vector<Vertex> ids;
  ids.reserve(global.size());
  for (Vertex v : global) ids.push_back(static_cast<Vertex>(outer.index_of(v)));
  return VertexSet::from_sorted(std::move(ids));
}

template <class Map>
GoodSetTrace remap_trace(const GoodSetTrace &t, Map &&map) {
  std::vector<TraceStep> steps = t.steps();
  for (TraceStep &s : steps) {
    if (s.kind == StepKind::merge) {
      s.witness_u = map(s.witness_u);
      s.witness_v = map(s.witness_v);
    } else {
      s.vertex = map(s.vertex);
    }
  }
  return GoodSetTrace(std::move(steps));
}

GoodSet lift(const GoodSet &c, const VertexSet &outer) {
  return {lift(c.vertices, outer), remap_trace(c.trace, [&](Vertex v) { return outer[v]; })};
}

GoodSet localize(const GoodSet &c, const VertexSet &outer) {
  return {localize(c.vertices, outer),
          remap_trace(c.trace, [&](Vertex v) { return static_cast<Vertex>(outer.index_of(v)); })};
}

VertexSet union_of(const std::vector<GoodSet> &sets) {
  std::vector<Vertex> ids;
  for (const auto &c : sets) ids.insert(ids.end(), c.vertices.begin(), c.vertices.end());
  return VertexSet(std::move(ids));
}

// Whether g minus `c` (local ids) keeps minimum degree >= k and is nonempty.
bool removal_keeps_min_degree(const Graph &g, const VertexSet &c, std::size_t k) {
  if (c.size() >= g.vertex_count()) return false;
  std::vector<std::size_t> loss(g.vertex_count(), 0);
  std::vector<char> in_c(g.vertex_count(), 0);
  for (Vertex v : c) in_c[v] = 1;
  for (Vertex v : c)
    for (Vertex u : g.neighbors(v))
      if (!in_c[u]) ++loss[u];
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (!in_c[u] && g.degree(u) - loss[u] < k) return false;
  return true;
}

// Disjoint with no edges between any two sets.
bool separated(const Graph &g, const std::vector<VertexSet> &sets, std::string *detail) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(g.vertex_count(), kNone);
  for (std::uint32_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i]) {
      if (v >= g.vertex_count()) {
        *detail = "vertex out of range";
        return false;
      }
      if (owner[v] != kNone) {
        *detail = "sets " + std::to_string(owner[v]) + " and " + std::to_string(i) + " share vertex " + std::to_string(v);
        return false;
      }
      owner[v] = i;
    }
  for (std::uint32_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i])
      for (Vertex u : g.neighbors(v))
        if (owner[u] != kNone && owner[u] != i) {
          *detail = "edge " + std::to_string(v) + "-" + std::to_string(u) + " joins sets " + std::to_string(i) +
                    " and " + std::to_string(owner[u]);
          return false;
        }
  return true;
}

void check_theorem_bound(const ExtractionResult &r) {
  const std::size_t n = r.stats.n;
  const double bound = size_bound(static_cast<std::int64_t>(r.k), static_cast<std::int64_t>(n), BoundKind::main);
  const double order = static_cast<double>(r.subgraph.size());
  if (order > static_cast<double>(n) - bound + kBoundSlack * static_cast<double>(n))
    throw ClaimViolation("theorem size bound", "output order " + std::to_string(r.subgraph.size()) + " exceeds n - " + fmt(bound));
}

void check_guarantee(const ExtractionResult &r) {
  if (!r.guarantee) return;
  const double n = static_cast<double>(r.stats.n);
  if (static_cast<double>(r.subgraph.size()) > n - r.guarantee->value + kBoundSlack * n)
    throw ClaimViolation("branch guarantee", "output order " + std::to_string(r.subgraph.size()) +
                                                 " exceeds n - " + fmt(r.guarantee->value));
}

void finish_stats(ExtractionResult &r) {
  r.stats.removed_total = union_of(r.removed).size();
  r.stats.output_order = r.subgraph.size();
}

} // namespace

std::optional<double> expected_guarantee(Branch b, std::size_t k, std::size_t n, std::size_t core_order) {
  const double peeled = static_cast<double>(n - core_order);
  const double n1 = static_cast<double>(core_order);
  const double kd = static_cast<double>(k);
  switch (b) {
  case Branch::peeled_only: return peeled;
  case Branch::large_good_set: return peeled + n1 / (2.0 * kd + 2.0);
  case Branch::main: return peeled + n1 / (4.0 * std::pow(kd + 1.0, 5) * log2d(core_order));
  case Branch::lemma4_fallback:
  case Branch::greedy_chain: return std::nullopt;
  }
  return std::nullopt;
}

ExtractionResult greedy_chain(const Graph &g, std::size_t k) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (g.vertex_count() == 0 || g.min_degree() < k)
    throw PreconditionError("greedy chain needs a nonempty graph of minimum degree >= k");
  ExtractionResult r;
  r.k = k;
  r.branch = Branch::greedy_chain;
  r.core = VertexSet::range(g.vertex_count());
  r.stats.n = r.stats.core_order = g.vertex_count();
  r.stats.edges = r.stats.core_edges = g.edge_count();

  VertexSet current = r.core;
  for (;;) {
    const Graph h = induced_subgraph(g, current);
    ++r.stats.chain_rounds;
    bool removed = false;
    for (const auto &c : maximal_good_sets(h, k)) {
      if (!removal_keeps_min_degree(h, c.vertices, k)) continue;
      GoodSet lifted = lift(c, current);
      current = set_difference(current, lifted.vertices);
      r.removed.push_back(std::move(lifted));
      removed = true;
      break;
    }
    if (!removed) break;
  }
  r.subgraph = current;
  if (!induces_min_degree(g, r.subgraph, k))
    throw ClaimViolation("greedy chain output", "result does not induce minimum degree k");
  finish_stats(r);
  return r;
}

ExtractionResult extract(const Graph &g, std::size_t k, Strategy strategy, const ExtractOptions &options) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  const std::size_t n = g.vertex_count();
  const std::size_t e = g.edge_count();
  const auto ki = static_cast<std::int64_t>(k);
  if (n < k + 1) throw HypothesisError("need n >= k+1, got n = " + std::to_string(n));
  const std::int64_t needed = t_threshold(ki, static_cast<std::int64_t>(n)) + 1;
  if (static_cast<std::int64_t>(e) < needed)
    throw HypothesisError("need at least t_k(n)+1 = " + std::to_string(needed) + " edges, got " + std::to_string(e));

  // Stage 1: peel, tracking that the edge hypothesis survives each removal.
  PeelResult peeled = peel(g, k);
  {
    auto cur_e = static_cast<std::int64_t>(e);
    auto cur_n = static_cast<std::int64_t>(n);
    for (std::size_t d : peeled.removal_degree) {
      cur_e -= static_cast<std::int64_t>(d);
      --cur_n;
      if (cur_e < threshold_formula(ki, cur_n) + 1)
        throw ClaimViolation("peeling keeps the edge hypothesis", "after removal, n = " + std::to_string(cur_n));
    }
  }
  const VertexSet core = peeled.core;
  const Graph g1 = induced_subgraph(g, core);
  const std::size_t n1 = g1.vertex_count();
  if (n1 < k + 2) throw ClaimViolation("peeling keeps the edge hypothesis", "core has only " + std::to_string(n1) + " vertices");

  ExtractionResult r;
  r.k = k;
  r.core = core;
  r.stats.n = n;
  r.stats.edges = e;
  r.stats.core_order = n1;
  r.stats.core_edges = g1.edge_count();
  const double peeled_count = static_cast<double>(n - n1);
  const std::string peeled_expr = std::to_string(n - n1);

  auto from_chain = [&](Branch branch) {
    ExtractionResult chain = greedy_chain(g1, k);
    r.branch = branch;
    r.subgraph = lift(chain.subgraph, core);
    for (const auto &c : chain.removed) r.removed.push_back(lift(c, core));
    r.stats.chain_rounds = chain.stats.chain_rounds;
    finish_stats(r);
    return r;
  };

  if (strategy == Strategy::greedy_chain) return from_chain(Branch::greedy_chain);

  if (options.peel_shortcut && peeled_count >= size_bound(ki, static_cast<std::int64_t>(n), BoundKind::main)) {
    r.branch = Branch::peeled_only;
    r.subgraph = core;
    r.guarantee = Guarantee{std::to_string(n) + " - " + std::to_string(n1), peeled_count};
    finish_stats(r);
    check_guarantee(r);
    check_theorem_bound(r);
    return r;
  }

  // Stage 2: degree-k census against n1/(2k+2).
  for (Vertex v = 0; v < n1; ++v) r.stats.degree_k_count += g1.degree(v) == k ? 1 : 0;
  if ((2 * k + 2) * r.stats.degree_k_count < n1) return from_chain(Branch::lemma4_fallback);

  // Stage 3: maximal good sets; a large one is halved into the window.
  const std::vector<MaximalGoodSet> sets = maximal_good_sets(g1, k);
  r.stats.good_set_count = sets.size();
  std::size_t largest = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].vertices.size() > sets[largest].vertices.size()) largest = i;
    r.stats.largest_good_set = std::max(r.stats.largest_good_set, sets[i].vertices.size());
  }
  if (!sets.empty() && sets[largest].vertices.size() * (k + 1) > n1) {
    const double lo = static_cast<double>(n1) / (2.0 * static_cast<double>(k) + 2.0);
    const double hi = static_cast<double>(n1) / (static_cast<double>(k) + 1.0);
    GoodSet part = shrink_to_range(g1, k, sets[largest], lo, hi);
    const std::size_t c = part.vertices.size();
    if (c + k + 1 > n1) throw ClaimViolation("large good set fits", "|C'| = " + std::to_string(c));
    const VertexSet rest = complement(part.vertices, static_cast<Vertex>(n1));
    const Graph rem = induced_subgraph(g1, rest);
    if (static_cast<std::int64_t>(rem.edge_count()) < threshold_formula(ki, static_cast<std::int64_t>(rest.size())))
      throw ClaimViolation("removing a good set keeps t_k edges", "remainder has " + std::to_string(rem.edge_count()) + " edges");
    const VertexSet out = k_core(rem, k);
    if (out.empty()) throw ClaimViolation("removing a good set keeps t_k edges", "remainder has an empty k-core");
    r.branch = Branch::large_good_set;
    r.subgraph = lift(lift(out, rest), core);
    r.removed.push_back(lift(part, core));
    r.guarantee = Guarantee{peeled_expr + " + " + std::to_string(n1) + "/(2*" + std::to_string(k) + "+2)",
                            peeled_count + lo};
    finish_stats(r);
    check_guarantee(r);
    check_theorem_bound(r);
    return r;
  }

  // Stage 4: dyadic collection, leftover graph H and its cover set.
  Collection coll = build_collection(sets, n1, k);
  r.bucket_index = coll.bucket_index;
  r.stats.bucket_index = coll.bucket_index;
  r.stats.collection_members = coll.members.size();
  r.stats.collection_total = coll.total_size;
  std::vector<GoodSet> member_sets(coll.members.begin(), coll.members.end());
  const VertexSet h_set = complement(union_of(member_sets), static_cast<Vertex>(n1));
  const Graph h = induced_subgraph(g1, h_set);
  const auto vh = static_cast<std::int64_t>(h.vertex_count());
  const auto eh = static_cast<std::int64_t>(h.edge_count());
  const auto members = static_cast<std::int64_t>(coll.members.size());
  r.stats.h_order = h.vertex_count();
  r.stats.h_edges = h.edge_count();
  if (eh < threshold_formula(ki, vh) - members + 1)
    throw ClaimViolation("leftover edge count", "e(H) = " + std::to_string(eh) + " below t_k(v_H) - |C| + 1");

  VertexSet s_local;
  if (k_core(h, k).empty()) {
    CoverCertificate cert = build_cover_set(h, k);
    s_local = cert.cover_set;
    r.stats.phi = cert.phi_value;
    const std::int64_t slack = 2 * (ki - 1) * vh - 2 * eh;
    if (static_cast<std::int64_t>(s_local.size()) > slack || slack > 2 * members + ki * ki)
      throw ClaimViolation("cover set size", "|S| = " + std::to_string(s_local.size()) + ", 2(k-1)v_H - 2e_H = " +
                                                 std::to_string(slack) + ", |C| = " + std::to_string(members));
    cert.cover_set = lift(lift(cert.cover_set, h_set), core);
    for (Vertex &v : cert.peel_order) v = core[h_set[v]];
    r.cover = std::move(cert);
  }
  const VertexSet s_g1 = lift(s_local, h_set);
  r.stats.cover_set_size = s_g1.size();

  // Stage 5: conflict graph over the collection and a Turan-greedy pick.
  const NeighborFamilies fams = neighbor_families(g1, coll, s_g1, k);
  const ConflictGraph conflicts = build_conflict_graph(coll, fams);
  r.stats.conflict_edges = conflicts.edges.size();
  if (conflicts.edges.size() > s_g1.size() * k * (k + 1) / 2)
    throw ClaimViolation("conflict edge count", std::to_string(conflicts.edges.size()) + " edges");
  const std::vector<std::uint32_t> chosen = greedy_independent_set(conflicts);
  r.stats.independent_set = chosen.size();
  if (static_cast<double>(chosen.size()) < turan_bound(coll.members.size(), conflicts.edges.size()) * (1.0 - kBoundSlack))
    throw ClaimViolation("Turan bound", "independent set of size " + std::to_string(chosen.size()));
  std::size_t kp4 = 1;
  for (int i = 0; i < 4; ++i) kp4 *= k + 1;
  if (chosen.size() * kp4 < coll.members.size())
    throw ClaimViolation("independent set size", std::to_string(chosen.size()) + " < |C|/(k+1)^4");
  for (const auto &fam : fams.families) {
    std::size_t hits = 0;
    for (std::uint32_t j : fam) hits += std::binary_search(chosen.begin(), chosen.end(), j) ? 1 : 0;
    if (hits > 1) throw ClaimViolation("one removed set per family", std::to_string(hits) + " hits");
  }

  // Stage 6: remove the chosen sets; the rest covers H, so its k-core is nonempty.
  std::vector<GoodSet> picked;
  std::size_t picked_total = 0;
  for (std::uint32_t j : chosen) {
    picked.push_back(coll.members[j]);
    picked_total += coll.members[j].vertices.size();
  }
  const VertexSet rest = complement(union_of(picked), static_cast<Vertex>(n1));
  const Graph rem = induced_subgraph(g1, rest);
  {
    std::vector<Vertex> embed(h_set.size());
    for (std::size_t i = 0; i < h_set.size(); ++i) embed[i] = static_cast<Vertex>(rest.index_of(h_set[i]));
    if (!is_cover(rem, h, s_local, k, embed))
      throw ClaimViolation("remainder covers H", "a vertex of degree < k lies outside V(H) \\ S");
  }
  const VertexSet out = k_core(rem, k);
  if (out.empty()) throw ClaimViolation("remainder covers H", "remainder has an empty k-core");
  const double alpha = 1.0 / (2.0 * static_cast<double>(k) + 2.0);
  const double promised = alpha * static_cast<double>(n1) / (2.0 * std::pow(k + 1.0, 4) * log2d(n1));
  if (static_cast<double>(picked_total) < promised * (1.0 - kBoundSlack))
    throw ClaimViolation("removed volume", std::to_string(picked_total) + " < " + fmt(promised));

  r.branch = Branch::main;
  r.subgraph = lift(lift(out, rest), core);
  for (const auto &c : coll.members) r.collection.push_back(lift(c, core));
  for (const auto &c : picked) r.removed.push_back(lift(c, core));
  r.chosen = chosen;
  r.guarantee = Guarantee{peeled_expr + " + " + std::to_string(n1) + "/(4*(" + std::to_string(k) + "+1)^5*log2(" +
                              std::to_string(n1) + "))",
                          *expected_guarantee(Branch::main, k, n, n1)};
  finish_stats(r);
  check_guarantee(r);
  check_theorem_bound(r);
  return r;
}

VerificationReport verify_certificate(const Graph &g, std::size_t k, const ExtractionResult &r) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  auto in_range = [&](const VertexSet &s) { return s.empty() || s.back() < g.vertex_count(); };

  add("k-matches", r.k == k, "result k = " + std::to_string(r.k));
  if (!add("ids-in-range", in_range(r.subgraph) && in_range(r.core))) return rep;
  add("output-min-degree", induces_min_degree(g, r.subgraph, k),
      "output of order " + std::to_string(r.subgraph.size()));
  const VertexSet core = k_core(g, k);
  add("core-matches", core == r.core);
  add("output-within-k-core", is_subset(r.subgraph, core));
  if (core != r.core || core.empty()) return rep;

  const Graph g1 = induced_subgraph(g, core);
  const std::size_t n = g.vertex_count();
  const std::size_t n1 = core.size();
  auto local = [&](const GoodSet &c) -> std::optional<GoodSet> {
    if (!in_range(c.vertices) || !is_subset(c.vertices, core)) return std::nullopt;
    try {
      return localize(c, core);
    } catch (const Error &) {
      return std::nullopt;
    }
  };
  auto replays = [&](const Graph &host, const GoodSet &c, std::string *why) {
    try {
      if (replay_trace(host, k, c.trace) == c.vertices) return true;
      *why = "trace derives a different set";
    } catch (const Error &ex) {
      *why = ex.what();
    }
    return false;
  };

  std::vector<GoodSet> removed_local;
  for (const auto &c : r.removed) {
    auto l = local(c);
    if (!add("removed-sets-in-core", l.has_value())) return rep;
    removed_local.push_back(std::move(*l));
  }

  if (r.branch == Branch::greedy_chain || r.branch == Branch::lemma4_fallback) {
    VertexSet current = VertexSet::range(static_cast<Vertex>(n1));
    bool chain_ok = true;
    std::string why;
    for (std::size_t i = 0; i < removed_local.size() && chain_ok; ++i) {
      const Graph hi = induced_subgraph(g1, current);
      if (!is_subset(removed_local[i].vertices, current)) {
        chain_ok = false;
        why = "set " + std::to_string(i) + " not inside the current graph";
        break;
      }
      GoodSet in_hi = localize(removed_local[i], current);
      if (!replays(hi, in_hi, &why)) {
        chain_ok = false;
        why = "set " + std::to_string(i) + ": " + why;
        break;
      }
      const auto maxima = maximal_good_sets(hi, k);
      const bool maximal = std::any_of(maxima.begin(), maxima.end(),
                                       [&](const auto &m) { return m.vertices == in_hi.vertices; });
      if (!maximal || !removal_keeps_min_degree(hi, in_hi.vertices, k)) {
        chain_ok = false;
        why = "set " + std::to_string(i) + (maximal ? " leaves a vertex of degree < k" : " is not a maximal good set");
        break;
      }
      current = set_difference(current, removed_local[i].vertices);
    }
    add("chain-steps-valid", chain_ok, why);
    add("chain-output-matches", lift(current, core) == r.subgraph);
  }

  if (r.branch == Branch::large_good_set) {
    std::string why;
    const bool one = removed_local.size() == 1;
    add("single-removed-set", one);
    if (one) {
      const GoodSet &c = removed_local.front();
      add("removed-trace-replays", replays(g1, c, &why), why);
      const double sz = static_cast<double>(c.vertices.size());
      add("window", sz >= static_cast<double>(n1) / (2.0 * k + 2.0) && sz <= static_cast<double>(n1) / (k + 1.0),
          "|C'| = " + std::to_string(c.vertices.size()));
      add("good-set-edge-bound", edges_meeting(g1, c.vertices) <= (k - 1) * c.vertices.size() + 1);
      add("output-avoids-removed", set_difference(r.subgraph, r.removed.front().vertices) == r.subgraph);
    }
  }

  if (r.branch == Branch::main) {
    std::string why;
    std::vector<GoodSet> coll_local;
    bool coll_ok = true;
    for (const auto &c : r.collection) {
      auto l = local(c);
      if (!l) {
        coll_ok = false;
        break;
      }
      coll_local.push_back(std::move(*l));
    }
    if (!add("collection-in-core", coll_ok && !coll_local.empty())) return rep;
    bool traces_ok = true, edge_ok = true;
    std::size_t lo = coll_local.front().vertices.size(), hi = lo, total = 0;
    for (const auto &c : coll_local) {
      traces_ok = traces_ok && replays(g1, c, &why);
      edge_ok = edge_ok && edges_meeting(g1, c.vertices) <= (k - 1) * c.vertices.size() + 1;
      lo = std::min(lo, c.vertices.size());
      hi = std::max(hi, c.vertices.size());
      total += c.vertices.size();
    }
    add("collection-traces-replay", traces_ok, why);
    add("good-set-edge-bound", edge_ok);
    std::vector<VertexSet> coll_sets;
    for (const auto &c : coll_local) coll_sets.push_back(c.vertices);
    std::string sep_why;
    add("collection-separated", separated(g1, coll_sets, &sep_why), sep_why);
    add("collection-maximal", [&] {
      auto maxima = maximal_good_sets(g1, k);
      return std::all_of(coll_sets.begin(), coll_sets.end(), [&](const VertexSet &s) {
        return std::any_of(maxima.begin(), maxima.end(), [&](const auto &m) { return m.vertices == s; });
      });
    }());
    add("dyadic-ratio", hi <= 2 * lo, std::to_string(lo) + ".." + std::to_string(hi));
    const double floor_total = static_cast<double>(n1) / ((2.0 * k + 2.0) * log2d(n1));
    add("collection-total", static_cast<double>(total) >= floor_total * (1.0 - kBoundSlack) && total < n1,
        std::to_string(total));

    const VertexSet h_set = complement(union_of(coll_local), static_cast<Vertex>(n1));
    const Graph h = induced_subgraph(g1, h_set);
    VertexSet s_g1;
    if (r.cover) {
      bool s_ok = in_range(r.cover->cover_set) && is_subset(r.cover->cover_set, core);
      if (s_ok) s_g1 = localize(r.cover->cover_set, core);
      s_ok = s_ok && is_subset(s_g1, h_set);
      add("cover-set-inside-h", s_ok);
      if (s_ok) {
        const VertexSet s_h = localize(s_g1, h_set);
        bool low = true;
        for (Vertex v : s_h) low = low && h.degree(v) + 1 <= k;
        add("cover-set-low-degree", low);
        const std::int64_t ph = phi(h, k);
        add("cover-set-phi", static_cast<std::int64_t>(s_h.size()) <= ph && r.cover->phi_value == ph,
            "|S| = " + std::to_string(s_h.size()) + ", phi = " + std::to_string(ph));
        add("cover-set-size", s_h.size() <= 2 * coll_local.size() + k * k);
        add("h-core-empty", k_core(h, k).empty());
      }
    } else {
      add("h-core-nonempty", !k_core(h, k).empty());
    }

    Collection coll;
    coll.members = coll_local;
    const NeighborFamilies fams = neighbor_families(g1, coll, s_g1, k);
    bool consumer = true, chosen_ok = true;
    for (std::uint32_t j : r.chosen) chosen_ok = chosen_ok && j < coll_local.size();
    chosen_ok = chosen_ok && std::is_sorted(r.chosen.begin(), r.chosen.end()) &&
                std::adjacent_find(r.chosen.begin(), r.chosen.end()) == r.chosen.end();
    for (const auto &fam : fams.families) {
      std::size_t hits = 0;
      for (std::uint32_t j : fam) hits += std::binary_search(r.chosen.begin(), r.chosen.end(), j) ? 1 : 0;
      consumer = consumer && hits <= 1;
    }
    add("chosen-indices-valid", chosen_ok);
    add("one-removed-set-per-family", consumer);
    std::size_t kp4 = 1;
    for (int i = 0; i < 4; ++i) kp4 *= k + 1;
    add("independent-set-size", r.chosen.size() * kp4 >= coll_local.size(),
        std::to_string(r.chosen.size()) + " of " + std::to_string(coll_local.size()));
    bool removed_match = chosen_ok && r.chosen.size() == removed_local.size();
    for (std::size_t i = 0; removed_match && i < r.chosen.size(); ++i)
      removed_match = coll_local[r.chosen[i]].vertices == removed_local[i].vertices;
    add("removed-are-chosen-members", removed_match);
    std::vector<VertexSet> removed_sets;
    for (const auto &c : removed_local) removed_sets.push_back(c.vertices);
    sep_why.clear();
    add("removed-separated", separated(g1, removed_sets, &sep_why), sep_why);
    add("output-avoids-removed", set_difference(r.subgraph, union_of(r.removed)) == r.subgraph);
  }

  const auto expected = expected_guarantee(r.branch, k, n, n1);
  bool arith = expected.has_value() == r.guarantee.has_value();
  if (arith && expected) arith = std::abs(*expected - r.guarantee->value) <= 1e-12 * std::max(1.0, *expected);
  add("guarantee-arithmetic", arith);
  if (r.guarantee)
    add("guarantee-met", static_cast<double>(r.subgraph.size()) <=
                             static_cast<double>(n) - r.guarantee->value + kBoundSlack * static_cast<double>(n));
  if (r.branch != Branch::lemma4_fallback && r.branch != Branch::greedy_chain) {
    const double bound = size_bound(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n), BoundKind::main);
    add("theorem-bound", static_cast<double>(r.subgraph.size()) <=
                             static_cast<double>(n) - bound + kBoundSlack * static_cast<double>(n),
        "n - bound = " + fmt(static_cast<double>(n) - bound));
  }
  return rep;
}

} // namespace mindeg
