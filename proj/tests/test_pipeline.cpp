#include <map>

#include "doctest.h"
#include "mindeg/errors.hpp"
#include "mindeg/generate.hpp"
#include "mindeg/pipeline.hpp"
#include "support.hpp"

using namespace mindeg;
using namespace testing;

namespace {

void check_result(const Graph &g, std::size_t k, const ExtractionResult &r) {
  CHECK(naive_min_degree(g, r.subgraph, k));
  CHECK(is_subset(r.subgraph, naive_core(g, k)));
  const VerificationReport rep = verify_certificate(g, k, r);
  for (const auto &c : rep.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

} // namespace

TEST_CASE("C12 plus a chord") {
  Graph g = with_edge(cycle(12), 0, 4);
  auto r = extract(g, 2);
  check_result(g, 2, r);
  CHECK(r.subgraph.size() <= 12);
  // Shorter cycle through the chord: 0-1-2-3-4.
  CHECK(naive_min_order(g, 2) == 5);
  CHECK(r.subgraph.size() >= 5);
}

TEST_CASE("wheel on six vertices plus a chord") {
  Graph g = with_edge(gen_wheel(3, 6), 1, 3);
  auto r = extract(g, 3);
  check_result(g, 3, r);
  CHECK(naive_min_order(g, 3) == 4);
  CHECK(naive_min_degree(g, VertexSet{0, 1, 2, 3}, 3));
  CHECK(r.subgraph.size() >= 4);
  CHECK(r.subgraph.size() < 6);
}

TEST_CASE("hypothesis is enforced") {
  CHECK_THROWS_AS(extract(complete(4), 3), HypothesisError);
  CHECK_THROWS_AS(extract(gen_wheel(3, 8), 3), HypothesisError);
  CHECK_THROWS_AS(extract(complete(3), 3), HypothesisError);
  CHECK_THROWS_AS(extract(cycle(5), 1), PreconditionError);
  // K5 has t_3(5)+1 = 8 <= 10 edges.
  auto r = extract(complete(5), 3);
  check_result(complete(5), 3, r);
}

TEST_CASE("greedy_chain examples") {
  Graph g = disjoint(cycle(5), complete(4));
  auto r = greedy_chain(g, 2);
  CHECK(r.subgraph == VertexSet{5, 6, 7, 8});
  REQUIRE(r.removed.size() == 1);
  CHECK(r.removed[0].vertices == VertexSet{0, 1, 2, 3, 4});
  CHECK_FALSE(r.guarantee.has_value());

  auto k5 = greedy_chain(complete(5), 2);
  CHECK(k5.subgraph == VertexSet::range(5));
  CHECK(k5.removed.empty());

  auto c5 = greedy_chain(cycle(5), 2);
  CHECK(c5.subgraph == VertexSet::range(5));

  CHECK_THROWS_AS(greedy_chain(path(4), 2), PreconditionError);
}

TEST_CASE("greedy-chain strategy through extract") {
  Graph g = with_edge(disjoint(cycle(5), complete(4)), 0, 5);
  auto r = extract(g, 2, Strategy::greedy_chain);
  CHECK(r.branch == Branch::greedy_chain);
  check_result(g, 2, r);
}

TEST_CASE("C_n plus a chord takes the large good set branch") {
  for (Vertex n = 8; n <= 60; n += 4) {
    Graph g = with_edge(cycle(n), 0, n / 2);
    auto r = extract(g, 2);
    CHECK(r.branch == Branch::large_good_set);
    REQUIRE(r.guarantee.has_value());
    CHECK(r.guarantee->value == doctest::Approx(n / 6.0));
    CHECK(static_cast<double>(r.subgraph.size()) <= n - n / 6.0);
    check_result(g, 2, r);
  }
}

TEST_CASE("hub graphs take the main branch") {
  std::map<Branch, int> seen;
  int with_cover = 0;
  for (std::uint64_t seed = 0; seed < 90; ++seed) {
    const std::size_t k = 2 + seed % 3;
    const auto r_hubs = static_cast<Vertex>(k + 1 + seed % 7);
    const auto m = static_cast<Vertex>((k - 1) * r_hubs + 2 + seed % 5);
    Graph g = hub_graph(k, r_hubs, m, seed);
    if (static_cast<std::int64_t>(g.edge_count()) < t_threshold(k, g.vertex_count()) + 1) continue;
    auto r = extract(g, k);
    ++seen[r.branch];
    if (r.branch == Branch::main) {
      with_cover += r.cover ? 1 : 0;
      CHECK_FALSE(r.collection.empty());
      CHECK(r.chosen.size() == r.removed.size());
    }
    check_result(g, k, r);
  }
  CHECK(seen[Branch::main] > 0);
  CHECK(with_cover > 0);
}

TEST_CASE("peel shortcut fires when peeling alone removes enough") {
  // K6 plus a long pendant path: peeling strips the path.
  std::vector<Edge> e = complete(6).edges();
  for (Vertex i = 6; i < 60; ++i) e.emplace_back(i - 1, i);
  Graph g = Graph::from_edges(60, e);
  REQUIRE(static_cast<std::int64_t>(g.edge_count()) >= t_threshold(2, 60) + 1);
  auto r = extract(g, 2, Strategy::theorem3, ExtractOptions{true});
  CHECK(r.branch == Branch::peeled_only);
  CHECK(r.subgraph == VertexSet::range(6));
  check_result(g, 2, r);
  auto full = extract(g, 2);
  CHECK(full.branch != Branch::peeled_only);
  check_result(g, 2, full);
}

TEST_CASE("random hypothesis instances") {
  std::map<Branch, int> seen;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t k = 2 + seed % 3;
    const std::size_t n = k + 2 + seed % 30;
    const auto m = std::min<std::size_t>(n * (n - 1) / 2, static_cast<std::size_t>(t_threshold(k, n)) + 1 + seed % 3);
    Graph g = gen_random_with_edges(n, m, seed);
    auto r = extract(g, k);
    ++seen[r.branch];
    check_result(g, k, r);
    if (n <= 16) CHECK(r.subgraph.size() >= naive_min_order(g, k));
  }
  MESSAGE("branches: main " << seen[Branch::main] << ", large " << seen[Branch::large_good_set] << ", fallback "
                            << seen[Branch::lemma4_fallback]);
}

TEST_CASE("wheel plus one edge") {
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t n = k + 3; n <= 40; n += 3) {
      Graph g = gen_extremal_plus_one(k, n, n * 31 + k);
      auto r = extract(g, k);
      check_result(g, k, r);
      CHECK(r.subgraph.size() < n);
    }
}

TEST_CASE("expected_guarantee") {
  CHECK(expected_guarantee(Branch::peeled_only, 3, 10, 6) == 4.0);
  CHECK(*expected_guarantee(Branch::large_good_set, 2, 60, 60) == doctest::Approx(10.0));
  CHECK(*expected_guarantee(Branch::main, 2, 1024, 1024) == doctest::Approx(1024.0 / (4 * 243 * 10.0)));
  CHECK_FALSE(expected_guarantee(Branch::lemma4_fallback, 2, 10, 10).has_value());
  CHECK_FALSE(expected_guarantee(Branch::greedy_chain, 2, 10, 10).has_value());
}

TEST_CASE("verify_certificate catches tampering") {
  Graph g = with_edge(gen_wheel(3, 6), 1, 3);
  auto r = extract(g, 3);
  REQUIRE(verify_certificate(g, 3, r).ok());

  auto low = r;
  low.subgraph = VertexSet{0, 1, 2};
  auto rep = verify_certificate(g, 3, low);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.find("output-min-degree"));
  CHECK_FALSE(rep.find("output-min-degree")->passed);

  auto wrong_k = verify_certificate(g, 4, r);
  CHECK_FALSE(wrong_k.ok());

  // Main branch: make two removed sets touch.
  Graph h;
  ExtractionResult main;
  for (std::uint64_t seed = 0;; ++seed) {
    h = hub_graph(2, 4, 7, seed);
    main = extract(h, 2);
    if (main.branch == Branch::main && main.removed.size() >= 2) break;
    REQUIRE(seed < 200);
  }
  REQUIRE(verify_certificate(h, 2, main).ok());
  auto touching = main;
  const Vertex x = touching.removed[0].vertices.front();
  touching.removed[1].vertices = VertexSet{x};
  auto rep2 = verify_certificate(h, 2, touching);
  REQUIRE(rep2.find("removed-separated"));
  CHECK_FALSE(rep2.find("removed-separated")->passed);

  auto hub = main;
  hub.removed[1].vertices = VertexSet{h.neighbors(hub.removed[0].vertices.front())[0]};
  auto rep3 = verify_certificate(h, 2, hub);
  CHECK_FALSE(rep3.find("removed-separated")->passed);

  auto guarantee = main;
  guarantee.guarantee->value += 1.0;
  CHECK_FALSE(verify_certificate(h, 2, guarantee).find("guarantee-arithmetic")->passed);

  auto chosen = main;
  chosen.chosen.pop_back();
  CHECK_FALSE(verify_certificate(h, 2, chosen).ok());
}

TEST_CASE("branch and strategy names round trip") {
  for (Branch b : {Branch::peeled_only, Branch::large_good_set, Branch::main, Branch::lemma4_fallback,
                   Branch::greedy_chain})
    CHECK(parse_branch(to_string(b)) == b);
  CHECK(parse_strategy("theorem3") == Strategy::theorem3);
  CHECK(parse_strategy("greedy-chain") == Strategy::greedy_chain);
  CHECK_THROWS_AS(parse_strategy("other"), PreconditionError);
}

TEST_CASE("extraction is deterministic") {
  Graph g = gen_random_with_edges(30, static_cast<std::size_t>(t_threshold(3, 30)) + 1, 9);
  auto a = extract(g, 3), b = extract(g, 3);
  CHECK(a.subgraph == b.subgraph);
  CHECK(a.branch == b.branch);
  CHECK(a.removed.size() == b.removed.size());
}
