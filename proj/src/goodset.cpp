#include "mindeg/goodset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "mindeg/random.hpp"

namespace mindeg {

bool GoodSetTrace::has_shared_merge() const {
  return std::any_of(steps_.begin(), steps_.end(), [](const TraceStep &s) { return s.shared_witness(); });
}

std::vector<std::uint32_t> GoodSetTrace::subtree_begins() const {
  if (steps_.empty()) throw TraceError(0, "empty trace");
  std::vector<std::uint32_t> begin(steps_.size());
  for (std::uint32_t i = 0; i < steps_.size(); ++i) {
    const TraceStep &s = steps_[i];
    switch (s.kind) {
    case StepKind::seed:
      begin[i] = i;
      break;
    case StepKind::absorb:
      if (i == 0 || s.left != i - 1) throw TraceError(i, "absorb must extend the preceding step");
      begin[i] = begin[i - 1];
      break;
    case StepKind::merge:
      if (i == 0 || s.right != i - 1) throw TraceError(i, "merge right operand must be the preceding step");
      if (begin[s.right] == 0 || s.left != begin[s.right] - 1)
        throw TraceError(i, "merge left operand must close the subtree before the right operand");
      begin[i] = begin[s.left];
      break;
    }
  }
  if (begin.back() != 0) throw TraceError(steps_.size() - 1, "steps do not form a single derivation tree");
  return begin;
}

GoodSetTrace GoodSetTrace::subtree(std::uint32_t step) const {
  const auto begin = subtree_begins();
  const std::uint32_t first = begin.at(step);
  std::vector<TraceStep> out(steps_.begin() + first, steps_.begin() + step + 1);
  for (TraceStep &s : out) {
    if (s.kind != StepKind::seed) s.left -= first;
    if (s.kind == StepKind::merge) s.right -= first;
  }
  return GoodSetTrace(std::move(out));
}

namespace {

using Scratch = std::unordered_set<Vertex>;

// Evaluates the trace bottom-up with small-into-large set unions. When `g`
// is non-null every step is checked against the rules; when `sizes` is
// non-null the size of every intermediate set is recorded.
VertexSet evaluate(const Graph *g, std::size_t k, const GoodSetTrace &trace,
                   std::vector<std::size_t> *sizes) {
  trace.subtree_begins();
  const auto &steps = trace.steps();
  std::vector<Scratch> stack;
  if (sizes) sizes->assign(steps.size(), 0);
  auto in_range = [&](std::size_t i, Vertex v) {
    if (g && v >= g->vertex_count()) throw TraceError(i, "vertex " + std::to_string(v) + " out of range");
  };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TraceStep &s = steps[i];
    switch (s.kind) {
    case StepKind::seed: {
      in_range(i, s.vertex);
      if (g && g->degree(s.vertex) != k)
        throw TraceError(i, "seed " + std::to_string(s.vertex) + " has degree " +
                                std::to_string(g->degree(s.vertex)) + ", expected " + std::to_string(k));
      stack.emplace_back();
      stack.back().insert(s.vertex);
      break;
    }
    case StepKind::absorb: {
      in_range(i, s.vertex);
      Scratch &cur = stack.back();
      if (g) {
        if (cur.count(s.vertex)) throw TraceError(i, "absorbed vertex " + std::to_string(s.vertex) + " already present");
        std::size_t outside = 0;
        for (Vertex u : g->neighbors(s.vertex)) outside += cur.count(u) ? 0 : 1;
        if (outside + 1 > k)
          throw TraceError(i, "absorbed vertex " + std::to_string(s.vertex) + " has " + std::to_string(outside) +
                                  " neighbors outside the set, at most " + std::to_string(k - 1) + " allowed");
      }
      cur.insert(s.vertex);
      break;
    }
    case StepKind::merge: {
      in_range(i, s.witness_u);
      in_range(i, s.witness_v);
      Scratch right = std::move(stack.back());
      stack.pop_back();
      Scratch &left = stack.back();
      if (g) {
        bool ok = s.witness_u == s.witness_v
                      ? left.count(s.witness_u) && right.count(s.witness_u)
                      : left.count(s.witness_u) && right.count(s.witness_v) &&
                            g->has_edge(s.witness_u, s.witness_v);
        if (!ok) throw TraceError(i, "merge witness does not join its operands");
      }
      if (left.size() < right.size()) std::swap(left, right);
      left.insert(right.begin(), right.end());
      break;
    }
    }
    if (sizes) (*sizes)[i] = stack.back().size();
  }
  return VertexSet(std::vector<Vertex>(stack.back().begin(), stack.back().end()));
}

struct StepInfo {
  std::vector<std::size_t> sizes;
  std::vector<Vertex> mins;
};

StepInfo step_info(const GoodSetTrace &trace) {
  StepInfo info;
  evaluate(nullptr, 0, trace, &info.sizes);
  const auto &steps = trace.steps();
  info.mins.resize(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TraceStep &s = steps[i];
    switch (s.kind) {
    case StepKind::seed: info.mins[i] = s.vertex; break;
    case StepKind::absorb: info.mins[i] = std::min(info.mins[s.left], s.vertex); break;
    case StepKind::merge: info.mins[i] = std::min(info.mins[s.left], info.mins[s.right]); break;
    }
  }
  return info;
}

// Operand kept when the final step of `node` is dropped.
std::uint32_t drop_last_step(const GoodSetTrace &trace, const StepInfo &info, std::uint32_t node) {
  const TraceStep &s = trace.steps()[node];
  switch (s.kind) {
  case StepKind::seed: throw PreconditionError("a singleton good set has no proper good subset");
  case StepKind::absorb: return s.left;
  case StepKind::merge: break;
  }
  const auto l = s.left, r = s.right;
  if (info.sizes[l] != info.sizes[r]) return info.sizes[l] > info.sizes[r] ? l : r;
  return info.mins[r] < info.mins[l] ? r : l;
}

// Like drop_last_step but keeps descending while the kept operand still
// equals the whole set (possible only with overlapping merge operands).
std::uint32_t proper_half(const GoodSetTrace &trace, const StepInfo &info, std::uint32_t node) {
  std::uint32_t child = drop_last_step(trace, info, node);
  while (info.sizes[child] == info.sizes[node]) child = drop_last_step(trace, info, child);
  return child;
}

GoodSet materialize(const GoodSetTrace &trace, std::uint32_t node) {
  GoodSet out;
  out.trace = trace.subtree(node);
  std::vector<Vertex> ids;
  for (const TraceStep &s : out.trace.steps())
    if (s.kind != StepKind::merge) ids.push_back(s.vertex);
  out.vertices = VertexSet(std::move(ids));
  return out;
}

void check_edge_bound(const Graph &g, std::size_t k, const GoodSet &c) {
  if (c.trace.has_shared_merge()) return;
  const std::size_t meeting = edges_meeting(g, c.vertices);
  check_claim(meeting <= (k - 1) * c.vertices.size() + 1, "good-set edge bound",
              std::to_string(meeting) + " edges meet a good set of size " + std::to_string(c.vertices.size()));
}

// Union-find closure over good-set components.
//
// Rounds alternate a merge phase (join components linked by an edge, and
// join everything through an active vertex of degree < k) with an absorb
// phase (add outside vertices with at most k-1 neighbors outside a single
// component). Only vertices whose neighborhood changed are re-examined.
class ClosureEngine {
public:
  ClosureEngine(const Graph &g, std::size_t k, const EngineOptions &options)
      : g_(g), k_(k), n_(g.vertex_count()), parent_(n_), members_(n_), root_(n_, 0), active_(n_, 0),
        active_nbrs_(n_, 0), stamp_(n_, 0), order_(n_), pos_(n_), count_(n_, 0) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
    std::iota(order_.begin(), order_.end(), Vertex{0});
    if (options.shuffle_seed) {
      Rng rng(*options.shuffle_seed);
      shuffle(order_, rng);
    }
    for (Vertex i = 0; i < n_; ++i) pos_[order_[i]] = i;
  }

  std::vector<MaximalGoodSet> run() {
    std::vector<Vertex> frontier;
    for (Vertex v : order_) {
      if (g_.degree(v) != k_) continue;
      activate(v);
      members_[v].push_back(v);
      root_[v] = push_step(TraceStep::seed(v));
      frontier.push_back(v);
    }
    if (frontier.empty()) return {};
    const Vertex some_seed = frontier.front();

    bool first_round = true;
    while (!frontier.empty()) {
      ++round_;
      candidates_.clear();
      for (Vertex v : frontier)
        for (Vertex u : g_.neighbors(v)) {
          if (!active_[u]) add_candidate(u);
          else if (find(u) != find(v)) join_with(find(v), find(u), v, u);
        }
      if (!unified_)
        for (Vertex v : frontier)
          if (g_.degree(v) < k_) {
            unify_through(v);
            break;
          }
      if (first_round)
        for (Vertex v = 0; v < n_; ++v)
          if (!active_[v] && g_.degree(v) < k_) add_candidate(v);
      first_round = false;

      std::sort(candidates_.begin(), candidates_.end(), [&](Vertex a, Vertex b) { return pos_[a] < pos_[b]; });
      frontier.clear();
      for (Vertex v : candidates_) {
        if (active_[v]) continue;
        if (auto target = absorb_target(v, some_seed)) {
          absorb(*target, v);
          frontier.push_back(v);
        }
      }
    }
    return collect();
  }

private:
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::uint32_t push_step(const TraceStep &s) {
    arena_.push_back(s);
    return static_cast<std::uint32_t>(arena_.size() - 1);
  }

  void activate(Vertex v) {
    active_[v] = 1;
    for (Vertex u : g_.neighbors(v)) ++active_nbrs_[u];
  }

  void add_candidate(Vertex v) {
    if (stamp_[v] == round_) return;
    stamp_[v] = round_;
    candidates_.push_back(v);
  }

  // Unions two components under a merge step whose left operand is ra's
  // trace. Vertices touching the smaller side are queued, since their best
  // per-component neighbor count may have grown.
  void join_with(Vertex ra, Vertex rb, Vertex wu, Vertex wv) {
    const std::uint32_t node = push_step(TraceStep::merge(root_[ra], root_[rb], wu, wv));
    const bool a_big = members_[ra].size() > members_[rb].size() ||
                       (members_[ra].size() == members_[rb].size() && ra < rb);
    const Vertex big = a_big ? ra : rb;
    const Vertex small = a_big ? rb : ra;
    for (Vertex x : members_[small])
      for (Vertex u : g_.neighbors(x))
        if (!active_[u]) add_candidate(u);
    parent_[small] = big;
    auto &dst = members_[big];
    dst.insert(dst.end(), members_[small].begin(), members_[small].end());
    std::vector<Vertex>().swap(members_[small]);
    root_[big] = node;
  }

  // An active vertex w of degree < k can be absorbed by every other
  // component; each such absorption overlaps w's own component in w.
  void unify_through(Vertex w) {
    std::vector<Vertex> reps;
    for (Vertex v : order_)
      if (active_[v] && find(v) == v && v != find(w)) reps.push_back(v);
    for (Vertex x : reps) {
      root_[x] = push_step(TraceStep::absorb(root_[x], w));
      join_with(find(w), x, w, w);
    }
    unified_ = true;
  }

  std::optional<Vertex> absorb_target(Vertex v, Vertex some_seed) {
    const std::size_t d = g_.degree(v);
    if (d < k_) {
      for (Vertex u : g_.neighbors(v))
        if (active_[u]) return find(u);
      return find(some_seed);
    }
    const std::size_t need = d - (k_ - 1);
    if (active_nbrs_[v] < need) return std::nullopt;
    std::optional<Vertex> target;
    touched_.clear();
    for (Vertex u : g_.neighbors(v)) {
      if (!active_[u]) continue;
      const Vertex r = find(u);
      if (count_[r]++ == 0) touched_.push_back(r);
      if (!target && count_[r] == need) target = r;
    }
    for (Vertex r : touched_) count_[r] = 0;
    return target;
  }

  void absorb(Vertex rep, Vertex v) {
    root_[rep] = push_step(TraceStep::absorb(root_[rep], v));
    parent_[v] = rep;
    members_[rep].push_back(v);
    activate(v);
  }

  GoodSetTrace extract(std::uint32_t root) {
    std::vector<std::uint32_t> reversed;
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      const std::uint32_t node = stack.back();
      stack.pop_back();
      reversed.push_back(node);
      const TraceStep &s = arena_[node];
      if (s.kind == StepKind::absorb) stack.push_back(s.left);
      if (s.kind == StepKind::merge) {
        stack.push_back(s.left);
        stack.push_back(s.right);
      }
    }
    std::vector<TraceStep> steps;
    steps.reserve(reversed.size());
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
      TraceStep s = arena_[*it];
      if (s.kind != StepKind::seed) s.left = remap_[s.left];
      if (s.kind == StepKind::merge) s.right = remap_[s.right];
      remap_[*it] = static_cast<std::uint32_t>(steps.size());
      steps.push_back(s);
    }
    return GoodSetTrace(std::move(steps));
  }

  std::vector<MaximalGoodSet> collect() {
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < n_; ++v) {
      if (!active_[v]) continue;
      if (find(v) == v) reps.push_back(v);
      for (Vertex u : g_.neighbors(v))
        if (active_[u] && find(u) != find(v))
          throw ClaimViolation("maximal good sets are non-adjacent",
                               "edge " + std::to_string(v) + "-" + std::to_string(u));
    }
    remap_.assign(arena_.size(), 0);
    std::vector<MaximalGoodSet> out;
    out.reserve(reps.size());
    for (Vertex r : reps) {
      MaximalGoodSet m;
      std::sort(members_[r].begin(), members_[r].end());
      m.vertices = VertexSet::from_sorted(std::move(members_[r]));
      m.trace = extract(root_[r]);
      check_edge_bound(g_, k_, m);
      out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.vertices.front() < b.vertices.front(); });
    return out;
  }

  const Graph &g_;
  std::size_t k_;
  Vertex n_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::uint32_t> root_;
  std::vector<char> active_;
  std::vector<std::uint32_t> active_nbrs_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
  std::vector<Vertex> candidates_;
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
  std::vector<TraceStep> arena_;
  std::vector<std::uint32_t> remap_;
  std::vector<std::uint32_t> count_;
  std::vector<Vertex> touched_;
  bool unified_ = false;
};

void require_k(std::size_t k) {
  if (k < 2) throw PreconditionError("k must be at least 2");
}

} // namespace

VertexSet replay_trace(const Graph &g, std::size_t k, const GoodSetTrace &trace) {
  require_k(k);
  return evaluate(&g, k, trace, nullptr);
}

std::vector<std::size_t> trace_step_sizes(const GoodSetTrace &trace) {
  std::vector<std::size_t> sizes;
  evaluate(nullptr, 0, trace, &sizes);
  return sizes;
}

std::vector<MaximalGoodSet> maximal_good_sets(const Graph &g, std::size_t k, const EngineOptions &options) {
  require_k(k);
  return ClosureEngine(g, k, options).run();
}

std::size_t edges_meeting(const Graph &g, const VertexSet &c) {
  std::size_t count = 0;
  for (Vertex v : c) {
    if (v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    for (Vertex u : g.neighbors(v))
      if (u > v || !c.contains(u)) ++count;
  }
  return count;
}

GoodSet half_subset(const Graph &g, std::size_t k, const GoodSet &m) {
  require_k(k);
  const StepInfo info = step_info(m.trace);
  const std::uint32_t root = m.trace.root();
  if (info.sizes[root] != m.vertices.size()) throw PreconditionError("trace does not derive the given vertex set");
  if (m.vertices.size() < 2) throw PreconditionError("half_subset requires a good set of size at least 2");
  GoodSet out = materialize(m.trace, proper_half(m.trace, info, root));
  check_edge_bound(g, k, out);
  return out;
}

GoodSet shrink_to_range(const Graph &g, std::size_t k, const GoodSet &m, double lo, double hi) {
  require_k(k);
  if (hi < 1.0 || hi < 2.0 * lo - 1.0) throw PreconditionError("window [lo, hi] needs hi >= 1 and hi >= 2 lo - 1");
  const double size = static_cast<double>(m.vertices.size());
  if (size < lo) throw PreconditionError("good set smaller than the window's lower end");
  if (size <= hi) return m;
  const StepInfo info = step_info(m.trace);
  std::uint32_t node = m.trace.root();
  if (info.sizes[node] != m.vertices.size()) throw PreconditionError("trace does not derive the given vertex set");
  while (static_cast<double>(info.sizes[node]) > hi) node = proper_half(m.trace, info, node);
  if (static_cast<double>(info.sizes[node]) < lo)
    throw PreconditionError("halving skipped over the window; widen it to hi >= 2 lo");
  GoodSet out = materialize(m.trace, node);
  check_edge_bound(g, k, out);
  return out;
}

std::string format_trace(const Graph &g, const GoodSetTrace &trace) {
  std::string out;
  for (const TraceStep &s : trace.steps()) {
    switch (s.kind) {
    case StepKind::seed: out += "seed " + g.label(s.vertex); break;
    case StepKind::absorb: out += "absorb " + g.label(s.vertex); break;
    case StepKind::merge:
      out += "merge " + std::to_string(s.left) + ' ' + std::to_string(s.right) + " via " + g.label(s.witness_u) +
             ' ' + g.label(s.witness_v);
      break;
    }
    out += '\n';
  }
  return out;
}

GoodSetTrace parse_trace(const Graph &g, std::string_view text) {
  const LabelIndex index(g);
  std::vector<TraceStep> steps;
  std::size_t pos = 0;
  auto parse_index = [](std::size_t i, std::string_view tok) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw TraceError(i, "bad step index '" + std::string(tok) + "'");
    return v;
  };
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::vector<std::string_view> tok;
    for (std::size_t i = 0; i < line.size();) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) continue;
    const std::size_t i = steps.size();
    const auto self = static_cast<std::uint32_t>(i);
    if (tok[0] == "seed" && tok.size() == 2) {
      steps.push_back(TraceStep::seed(index.at(tok[1])));
    } else if (tok[0] == "absorb" && tok.size() == 2) {
      if (i == 0) throw TraceError(i, "absorb without a preceding step");
      steps.push_back(TraceStep::absorb(self - 1, index.at(tok[1])));
    } else if (tok[0] == "merge" && tok.size() == 6 && tok[3] == "via") {
      steps.push_back(TraceStep::merge(parse_index(i, tok[1]), parse_index(i, tok[2]), index.at(tok[4]), index.at(tok[5])));
    } else {
      throw TraceError(i, "unrecognized step '" + std::string(line) + "'");
    }
  }
  GoodSetTrace trace(std::move(steps));
  trace.subtree_begins();
  return trace;
}

} // namespace mindeg
