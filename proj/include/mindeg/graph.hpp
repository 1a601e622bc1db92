#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mindeg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free set of dense vertex ids.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  // Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex n);
  // Caller guarantees `ids` is strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const;
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<Vertex> &ids() const noexcept { return ids_; }

  // Position of `v` in the sorted order; requires contains(v).
  std::size_t index_of(Vertex v) const;

  friend bool operator==(const VertexSet &, const VertexSet &) = default;
  friend auto operator<=>(const VertexSet &a, const VertexSet &b) { return a.ids_ <=> b.ids_; }

private:
  std::vector<Vertex> ids_;
};

VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_difference(const VertexSet &a, const VertexSet &b);
bool is_subset(const VertexSet &a, const VertexSet &b);
// Complement of `s` inside {0, ..., n-1}.
VertexSet complement(const VertexSet &s, Vertex n);

// Immutable simple undirected graph in compressed adjacency form.
//
// Neighbor lists are sorted. Labels map dense ids back to the names used in
// the source text; a graph without explicit labels uses decimal ids.
class Graph {
public:
  Graph() = default;

  // Throws PreconditionError on self-loops or out-of-range endpoints.
  // Duplicate edges are dropped; their count is written to `duplicates`.
  static Graph from_edges(Vertex n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {},
                          std::size_t *duplicates = nullptr);

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(degree_count()); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  // Minimum degree; zero for the empty graph.
  std::size_t min_degree() const;
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Vertex v) const;
  const std::vector<std::string> &labels() const noexcept { return labels_; }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

private:
  std::size_t degree_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
};

struct LoadResult {
  Graph graph;
  std::size_t duplicate_edges = 0;
};

// Parses edge-list text: one edge per line as two whitespace-separated
// labels, '#' comments and blank lines skipped. Labels get dense ids in
// order of first appearance.
LoadResult load_graph(std::string_view text);
LoadResult load_graph_file(const std::string &path);

// Edge-list text using the graph's labels, one "u v" per line with u < v.
std::string format_edge_list(const Graph &g, std::string_view header = {});

// Maps a label back to its dense id. Throws PreconditionError when absent.
class LabelIndex {
public:
  explicit LabelIndex(const Graph &g);
  Vertex at(std::string_view label) const;

private:
  const Graph *graph_;
  std::vector<std::pair<std::string, Vertex>> sorted_;
};

// Graph on `w` (renumbered 0..|w|-1 in sorted order) with the edges of `g`
// inside `w`. Labels are carried over.
Graph induced_subgraph(const Graph &g, const VertexSet &w);

struct PeelResult {
  VertexSet core;
  // Vertices in the order they were removed.
  std::vector<Vertex> order;
  // Degree of order[i] at the moment it was removed.
  std::vector<std::size_t> removal_degree;
};

// Repeatedly removes the lowest-id vertex of degree <= k-1.
PeelResult peel(const Graph &g, std::size_t k);

// Maximum vertex set inducing minimum degree >= k (possibly empty).
VertexSet k_core(const Graph &g, std::size_t k);

// True iff `w` is nonempty and g[w] has minimum degree >= k.
bool induces_min_degree(const Graph &g, const VertexSet &w, std::size_t k);

// (k-1)(n-k+2) + C(k-2, 2), evaluated for any integer n.
std::int64_t threshold_formula(std::int64_t k, std::int64_t n);

// Extremal edge count t_k(n). Requires k >= 2 and n >= k+1.
std::int64_t t_threshold(std::int64_t k, std::int64_t n);

enum class BoundKind { main, sqrt };

// Removable-vertex count promised by the two size bounds:
//   main: n / (4 (k+1)^5 log2 n)
//   sqrt: floor(sqrt(n / (6 k^3)))
double size_bound(std::int64_t k, std::int64_t n, BoundKind which);

// Relative slack allowed when comparing against log-valued guarantees.
inline constexpr double kBoundSlack = 1e-9;

} // namespace mindeg
