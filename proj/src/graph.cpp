#include "mindeg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "mindeg/errors.hpp"

namespace mindeg {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  return from_sorted(std::move(ids));
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t VertexSet::index_of(Vertex v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw PreconditionError("vertex " + std::to_string(v) + " not in set");
  return static_cast<std::size_t>(it - ids_.begin());
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet &a, const VertexSet &b) {
  std::vector<Vertex> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

bool is_subset(const VertexSet &a, const VertexSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet complement(const VertexSet &s, Vertex n) {
  std::vector<Vertex> out;
  out.reserve(n - std::min<std::size_t>(n, s.size()));
  auto it = s.begin();
  for (Vertex v = 0; v < n; ++v) {
    while (it != s.end() && *it < v) ++it;
    if (it == s.end() || *it != v) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels,
                        std::size_t *duplicates) {
  if (!labels.empty() && labels.size() != n)
    throw PreconditionError("label count does not match vertex count");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  auto last = std::unique(norm.begin(), norm.end());
  if (duplicates) *duplicates = static_cast<std::size_t>(norm.end() - last);
  norm.erase(last, norm.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : norm) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.adjacency_.resize(norm.size() * 2);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // With edges sorted as (min, max), every list receives its smaller
  // neighbors first, then its larger ones, each in increasing order.
  for (auto [u, v] : norm) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
  if (vertex_count() == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

LoadResult load_graph(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view name) {
    auto [it, inserted] = ids.try_emplace(std::string(name), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two vertex labels, found " + std::to_string(tokens.size()));
    if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop at '" + std::string(tokens[0]) + "'");
    Vertex u = intern(tokens[0]);
    Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }

  LoadResult r;
  auto n = static_cast<Vertex>(labels.size());
  r.graph = Graph::from_edges(n, edges, std::move(labels), &r.duplicate_edges);
  return r;
}

LoadResult load_graph_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string format_edge_list(const Graph &g, std::string_view header) {
  std::string out;
  if (!header.empty()) {
    out += "# ";
    out += header;
    out += '\n';
  }
  for (auto [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

LabelIndex::LabelIndex(const Graph &g) : graph_(&g) {
  if (!g.has_labels()) return;
  sorted_.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) sorted_.emplace_back(g.labels()[v], v);
  std::sort(sorted_.begin(), sorted_.end());
}

Vertex LabelIndex::at(std::string_view label) const {
  if (!graph_->has_labels()) {
    Vertex v = 0;
    auto [p, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
    if (ec == std::errc() && p == label.data() + label.size() && v < graph_->vertex_count()) return v;
  } else {
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), label,
                               [](const auto &e, std::string_view l) { return e.first < l; });
    if (it != sorted_.end() && it->first == label) return it->second;
  }
  throw PreconditionError("unknown vertex label '" + std::string(label) + "'");
}

Graph induced_subgraph(const Graph &g, const VertexSet &w) {
  const Vertex n = g.vertex_count();
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(n, kAbsent);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= n) throw PreconditionError("vertex " + std::to_string(w[i]) + " out of range");
    local[w[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : w)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] != kAbsent) edges.emplace_back(local[u], local[v]);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(w.size());
    for (Vertex u : w) labels.push_back(g.labels()[u]);
  } else if (!w.empty() && (w.back() + 1 != w.size())) {
    labels.reserve(w.size());
    for (Vertex u : w) labels.push_back(std::to_string(u));
  }
  return Graph::from_edges(static_cast<Vertex>(w.size()), edges, std::move(labels));
}

PeelResult peel(const Graph &g, std::size_t k) {
  const Vertex n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> eligible;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] + 1 <= k) eligible.push(v);
  }
  PeelResult r;
  while (!eligible.empty()) {
    Vertex v = eligible.top();
    eligible.pop();
    if (removed[v]) continue;
    removed[v] = true;
    r.order.push_back(v);
    r.removal_degree.push_back(deg[v]);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      if (deg[u]-- == k) eligible.push(u);
    }
  }
  std::vector<Vertex> core;
  core.reserve(n - r.order.size());
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) core.push_back(v);
  r.core = VertexSet::from_sorted(std::move(core));
  for (Vertex v : r.core)
    if (deg[v] < k) throw ClaimViolation("k-core minimum degree", "vertex " + std::to_string(v));
  return r;
}

VertexSet k_core(const Graph &g, std::size_t k) { return peel(g, k).core; }

bool induces_min_degree(const Graph &g, const VertexSet &w, std::size_t k) {
  if (w.empty()) return false;
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : w) {
    if (v >= g.vertex_count()) return false;
    in[v] = true;
  }
  for (Vertex v : w) {
    std::size_t d = 0;
    for (Vertex u : g.neighbors(v)) d += in[u] ? 1 : 0;
    if (d < k) return false;
  }
  return true;
}

std::int64_t threshold_formula(std::int64_t k, std::int64_t n) {
  return (k - 1) * (n - k + 2) + (k - 2) * (k - 3) / 2;
}

std::int64_t t_threshold(std::int64_t k, std::int64_t n) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (n <= k) throw PreconditionError("t_k(n) requires n >= k+1");
  return threshold_formula(k, n);
}

double size_bound(std::int64_t k, std::int64_t n, BoundKind which) {
  if (n < 2) throw PreconditionError("size_bound requires n >= 2");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  if (which == BoundKind::main) return nd / (4.0 * std::pow(kd + 1.0, 5) * std::log2(nd));
  return std::floor(std::sqrt(nd / (6.0 * kd * kd * kd)));
}

} // namespace mindeg
