#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

struct OracleBudget {
  // Exhaustive operations refuse graphs with more vertices than this.
  std::size_t max_vertices = default_max_vertices();
  std::size_t trial_count = 100;
  std::uint64_t seed = 0;

  // MINDEG_ORACLE_BUDGET if set to a positive integer, else 20.
  static std::size_t default_max_vertices();
};

// Hard ceiling for the bitmask oracles regardless of budget.
inline constexpr std::size_t kOracleVertexLimit = 64;

// Smallest vertex set inducing minimum degree >= k, lexicographically first
// among those of that size; nullopt when the k-core is empty. The search
// runs over subsets of the k-core, so only the core must fit the budget.
std::optional<VertexSet> min_order_mindeg_subgraph(const Graph &g, std::size_t k,
                                                   const OracleBudget &budget = {});

// Maximal good sets by naive rule application in a seeded random order
// until nothing changes. Ordered by smallest vertex.
std::vector<VertexSet> brute_good_closure(const Graph &g, std::size_t k, const OracleBudget &budget = {});

struct CoverCounterexample {
  Graph cover;
  std::size_t trial = 0;
  std::uint64_t seed = 0;

  // Edge list with a one-line "seed/trial" header.
  std::string serialize() const;
};

struct CoverCheckResult {
  std::size_t trials = 0;
  std::optional<CoverCounterexample> counterexample;
  bool passed() const { return !counterexample.has_value(); }
};

// Random (H,S,k)-covers: H's vertices keep their ids, fresh vertices follow.
// Trial 0 adds only edges forced by the degree condition; later trials first
// add random fresh vertices and edges. Every cover is checked for a nonempty
// k-core; the first failing trial is returned.
CoverCheckResult random_cover_check(const Graph &h, const VertexSet &s, std::size_t k,
                                    const OracleBudget &budget = {});

// One cover as generated by trial `trial` of random_cover_check.
Graph random_cover(const Graph &h, const VertexSet &s, std::size_t k, std::uint64_t seed, std::size_t trial);

} // namespace mindeg
