#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mindeg/conflict.hpp"
#include "mindeg/cover.hpp"
#include "mindeg/goodset.hpp"
#include "mindeg/graph.hpp"

namespace mindeg {

enum class Branch { peeled_only, large_good_set, main, lemma4_fallback, greedy_chain };
enum class Strategy { theorem3, greedy_chain };

std::string to_string(Branch b);
Branch parse_branch(const std::string &name);
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string &name);

// Claimed number of removable vertices, kept with the arithmetic that
// produced it so a verifier can recompute it.
struct Guarantee {
  std::string expression;
  double value = 0.0;
};

struct StageStats {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t core_order = 0;
  std::size_t core_edges = 0;
  std::size_t degree_k_count = 0;
  std::size_t good_set_count = 0;
  std::size_t largest_good_set = 0;
  std::size_t bucket_index = 0;
  std::size_t collection_members = 0;
  std::size_t collection_total = 0;
  std::size_t h_order = 0;
  std::size_t h_edges = 0;
  std::size_t cover_set_size = 0;
  std::int64_t phi = 0;
  std::size_t conflict_edges = 0;
  std::size_t independent_set = 0;
  std::size_t chain_rounds = 0;
  std::size_t removed_total = 0;
  std::size_t output_order = 0;
};

// Everything an extraction produced. All vertex ids refer to the input
// graph; good-set traces are derivations inside the k-core `core` (for the
// chain branches: inside the core minus the earlier removals).
struct ExtractionResult {
  std::size_t k = 0;
  Branch branch = Branch::main;
  VertexSet subgraph;
  VertexSet core;
  std::vector<GoodSet> removed;
  std::optional<Guarantee> guarantee;

  // Main-branch certificate.
  std::size_t bucket_index = 0;
  std::vector<MaximalGoodSet> collection;
  std::optional<CoverCertificate> cover;
  std::vector<std::uint32_t> chosen;

  StageStats stats;
};

struct ExtractOptions {
  // Return the k-core directly when peeling alone already removed the
  // theorem's vertex count.
  bool peel_shortcut = false;
};

// Requires n >= k+1 and e >= t_k(n)+1 (HypothesisError otherwise). Any
// failed internal claim raises ClaimViolation.
ExtractionResult extract(const Graph &g, std::size_t k, Strategy strategy = Strategy::theorem3,
                         const ExtractOptions &options = {});

// Removes, while possible, the maximal good set with the smallest least
// vertex whose removal leaves a nonempty graph of minimum degree >= k.
// Requires minimum degree >= k.
ExtractionResult greedy_chain(const Graph &g, std::size_t k);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult *find(const std::string &name) const;
};

// Independently re-checks an extraction result against `g`.
VerificationReport verify_certificate(const Graph &g, std::size_t k, const ExtractionResult &r);

// Guarantee value a result of this shape is entitled to; none for the
// chain branches.
std::optional<double> expected_guarantee(Branch b, std::size_t k, std::size_t n, std::size_t core_order);

} // namespace mindeg
