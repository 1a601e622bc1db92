#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindeg/errors.hpp"
#include "mindeg/graph.hpp"

namespace mindeg {

enum class StepKind : std::uint8_t { seed, absorb, merge };

// One derivation step of a good set.
//
//   seed    {vertex} for a vertex of degree exactly k
//   absorb  set(left) + vertex, where vertex has at most k-1 neighbors
//           outside set(left)
//   merge   set(left) + set(right), justified by the witness: an edge
//           witness_u--witness_v with witness_u in the left set and
//           witness_v in the right set, or a shared vertex when
//           witness_u == witness_v
struct TraceStep {
  StepKind kind = StepKind::seed;
  Vertex vertex = 0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Vertex witness_u = 0;
  Vertex witness_v = 0;

  static TraceStep seed(Vertex v) { return {StepKind::seed, v, 0, 0, 0, 0}; }
  static TraceStep absorb(std::uint32_t base, Vertex v) { return {StepKind::absorb, v, base, 0, 0, 0}; }
  static TraceStep merge(std::uint32_t left, std::uint32_t right, Vertex u, Vertex v) {
    return {StepKind::merge, 0, left, right, u, v};
  }
  bool shared_witness() const { return kind == StepKind::merge && witness_u == witness_v; }

  friend bool operator==(const TraceStep &, const TraceStep &) = default;
};

// Derivation tree of a good set, stored in post-order with the root last.
// An absorb step's base is the step right before it; a merge step's right
// operand is the step right before it and its left operand closes the
// subtree before that. Every subtree is therefore a contiguous slice.
class GoodSetTrace {
public:
  GoodSetTrace() = default;
  explicit GoodSetTrace(std::vector<TraceStep> steps) : steps_(std::move(steps)) {}

  const std::vector<TraceStep> &steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  std::uint32_t root() const { return static_cast<std::uint32_t>(steps_.size() - 1); }
  bool has_shared_merge() const;

  // First step index of each step's subtree. Throws TraceError when the
  // steps do not form a single post-order tree.
  std::vector<std::uint32_t> subtree_begins() const;

  // The subtree rooted at `step`, renumbered from zero.
  GoodSetTrace subtree(std::uint32_t step) const;

  friend bool operator==(const GoodSetTrace &, const GoodSetTrace &) = default;

private:
  std::vector<TraceStep> steps_;
};

// A trace step that breaks the tree layout or one of the three rules.
class TraceError : public PreconditionError {
public:
  TraceError(std::size_t step, const std::string &what)
      : PreconditionError("trace step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

private:
  std::size_t step_;
};

struct GoodSet {
  VertexSet vertices;
  GoodSetTrace trace;
};

// A good set that no rule can extend.
using MaximalGoodSet = GoodSet;

// Replays `trace` on `g`, checking every step, and returns the vertex set it
// derives.
VertexSet replay_trace(const Graph &g, std::size_t k, const GoodSetTrace &trace);

// Number of distinct vertices derived by each step of a trace. Does not
// validate rules.
std::vector<std::size_t> trace_step_sizes(const GoodSetTrace &trace);

struct EngineOptions {
  // When set, vertices are processed in a seeded random order instead of
  // increasing id. The resulting family is the same; traces may differ.
  std::optional<std::uint64_t> shuffle_seed;
};

// All maximal good sets of `g`, ordered by smallest vertex id. Sets are
// pairwise disjoint with no edges between them; each carries a trace that
// replays to exactly its vertices.
std::vector<MaximalGoodSet> maximal_good_sets(const Graph &g, std::size_t k,
                                              const EngineOptions &options = {});

// Edges with at least one endpoint in `c`.
std::size_t edges_meeting(const Graph &g, const VertexSet &c);

// Good proper subset of `m` with |m|/2 <= size <= |m|-1, obtained by dropping
// the final derivation step. A final merge keeps its larger operand; ties go
// to the operand holding the smaller least vertex.
GoodSet half_subset(const Graph &g, std::size_t k, const GoodSet &m);

// Applies half_subset until the size is at most `hi`.
// Requires |m| >= lo, hi >= 1 and hi >= 2*lo - 1.
GoodSet shrink_to_range(const Graph &g, std::size_t k, const GoodSet &m, double lo, double hi);

// Line-oriented trace text ("seed v", "absorb v", "merge L R via u v"),
// vertices written as graph labels.
std::string format_trace(const Graph &g, const GoodSetTrace &trace);
GoodSetTrace parse_trace(const Graph &g, std::string_view text);

} // namespace mindeg
