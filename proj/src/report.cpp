#include "mindeg/report.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "mindeg/errors.hpp"

namespace mindeg {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string labels(const Graph &g, const VertexSet &s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

void put(std::ostringstream &os, std::string_view key, const std::string &value) {
  os << key << ':';
  if (!value.empty()) os << ' ' << value;
  os << '\n';
}

template <class T>
void put(std::ostringstream &os, std::string_view key, T value) {
  put(os, key, std::to_string(value));
}

void put_set(std::ostringstream &os, const Graph &g, const GoodSet &c) {
  put(os, "set", labels(g, c.vertices));
  put(os, "trace", c.trace.size());
  os << format_trace(g, c.trace);
}

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() {
    skip_blank();
    return pos_ >= text_.size();
  }

  std::string_view line() {
    skip_blank();
    if (pos_ >= text_.size()) throw ParseError(line_no_ + 1, "unexpected end of report");
    std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) eol = text_.size();
    std::string_view out = text_.substr(pos_, eol - pos_);
    if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
    pos_ = eol + 1;
    ++line_no_;
    return out;
  }

  // Value of the next line, which must be "key: value".
  std::string_view expect(std::string_view key) {
    std::string_view l = line();
    if (l.substr(0, key.size()) != key || l.size() < key.size() + 1 || l[key.size()] != ':')
      throw ParseError(line_no_, "expected '" + std::string(key) + ":'");
    l.remove_prefix(key.size() + 1);
    if (!l.empty() && l.front() == ' ') l.remove_prefix(1);
    return l;
  }

  std::size_t number(std::string_view key) {
    std::string_view v = expect(key);
    std::size_t x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) throw ParseError(line_no_, "bad number for " + std::string(key));
    return x;
  }

  std::size_t line_no() const { return line_no_; }

private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view l = text_.substr(pos_, eol - pos_);
      if (l.find_first_not_of(" \t\r") != std::string_view::npos) return;
      pos_ = eol + 1;
      ++line_no_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexSet read_set(const LabelIndex &index, std::string_view value, std::size_t line) {
  std::vector<Vertex> ids;
  try {
    for (auto w : words(value)) ids.push_back(index.at(w));
  } catch (const PreconditionError &e) {
    throw ParseError(line, e.what());
  }
  return VertexSet(std::move(ids));
}

GoodSet read_good_set(const Graph &g, const LabelIndex &index, Cursor &cur) {
  GoodSet c;
  c.vertices = read_set(index, cur.expect("set"), cur.line_no());
  const std::size_t steps = cur.number("trace");
  const std::size_t first = cur.line_no() + 1;
  std::string body;
  for (std::size_t i = 0; i < steps; ++i) {
    body += cur.line();
    body += '\n';
  }
  try {
    c.trace = parse_trace(g, body);
  } catch (const TraceError &e) {
    throw ParseError(first + e.step(), e.what());
  } catch (const PreconditionError &e) {
    throw ParseError(first, e.what());
  }
  return c;
}

} // namespace

std::string set_digest(const Graph &g, const VertexSet &s) {
  std::string bytes;
  for (Vertex v : s) {
    bytes += g.label(v);
    bytes += '\n';
  }
  return hex(fnv1a64(bytes));
}

std::string graph_digest(const Graph &g) {
  std::string bytes = std::to_string(g.vertex_count()) + '\n';
  for (auto [u, v] : g.edges()) bytes += g.label(u) + ' ' + g.label(v) + '\n';
  return hex(fnv1a64(bytes));
}

std::string format_extraction_report(const Graph &g, const ExtractionResult &r, const ReportContext &ctx) {
  std::ostringstream os;
  os << "mindeg-report " << kReportVersion << '\n';
  put(os, "command", ctx.command);
  put(os, "input", ctx.input);
  put(os, "input-digest", graph_digest(g));
  put(os, "seed", ctx.seed);
  put(os, "strategy", to_string(ctx.strategy));
  put(os, "k", r.k);
  const StageStats &s = r.stats;
  put(os, "n", s.n);
  put(os, "edges", s.edges);
  put(os, "core-order", s.core_order);
  put(os, "core-edges", s.core_edges);
  put(os, "degree-k-count", s.degree_k_count);
  put(os, "good-sets", s.good_set_count);
  put(os, "largest-good-set", s.largest_good_set);
  put(os, "bucket-index", s.bucket_index);
  put(os, "collection-members", s.collection_members);
  put(os, "collection-total", s.collection_total);
  put(os, "h-order", s.h_order);
  put(os, "h-edges", s.h_edges);
  put(os, "cover-set-size", s.cover_set_size);
  put(os, "phi", s.phi);
  put(os, "conflict-edges", s.conflict_edges);
  put(os, "independent-set", s.independent_set);
  put(os, "chain-rounds", s.chain_rounds);
  put(os, "removed-total", s.removed_total);
  put(os, "output-order", s.output_order);
  put(os, "branch", to_string(r.branch));
  if (r.guarantee) {
    put(os, "guarantee", r.guarantee->expression);
    put(os, "guarantee-value", fmt(r.guarantee->value));
  } else {
    put(os, "guarantee", std::string("none"));
  }
  if (s.n >= 2)
    put(os, "theorem-bound",
        fmt(size_bound(static_cast<std::int64_t>(r.k), static_cast<std::int64_t>(s.n), BoundKind::main)));
  put(os, "output-digest", set_digest(g, r.subgraph));

  os << "certificate:\n";
  put(os, "core", labels(g, r.core));
  put(os, "subgraph", labels(g, r.subgraph));
  put(os, "removed", r.removed.size());
  for (const auto &c : r.removed) put_set(os, g, c);
  if (r.branch == Branch::main) {
    put(os, "bucket", r.bucket_index);
    put(os, "collection", r.collection.size());
    for (const auto &c : r.collection) put_set(os, g, c);
    if (r.cover) {
      put(os, "cover-set", labels(g, r.cover->cover_set));
      std::string order;
      for (Vertex v : r.cover->peel_order) order += (order.empty() ? "" : " ") + g.label(v);
      put(os, "cover-peel", order);
      put(os, "cover-phi", r.cover->phi_value);
    } else {
      put(os, "cover-set", std::string("none"));
    }
    std::string chosen;
    for (auto j : r.chosen) chosen += (chosen.empty() ? "" : " ") + std::to_string(j);
    put(os, "chosen", chosen);
  }
  os << "end\n";
  return os.str();
}

ExtractionResult parse_extraction_report(const Graph &g, std::string_view text) {
  Cursor cur(text);
  const std::string want = "mindeg-report " + std::to_string(kReportVersion);
  if (cur.line() != want) throw ParseError(cur.line_no(), "expected '" + want + "'");
  const LabelIndex index(g);

  ExtractionResult r;
  bool have_k = false, have_branch = false;
  std::string guarantee_expr;
  std::optional<double> guarantee_value;
  for (;;) {
    std::string_view l = cur.line();
    if (l == "certificate:") break;
    const auto colon = l.find(':');
    if (colon == std::string_view::npos) throw ParseError(cur.line_no(), "expected 'key: value'");
    const std::string_view key = l.substr(0, colon);
    std::string_view value = l.substr(colon + 1);
    if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
    try {
      if (key == "k") {
        r.k = std::stoul(std::string(value));
        have_k = true;
      } else if (key == "branch") {
        r.branch = parse_branch(std::string(value));
        have_branch = true;
      } else if (key == "guarantee") {
        guarantee_expr = value;
      } else if (key == "guarantee-value") {
        guarantee_value = std::stod(std::string(value));
      }
    } catch (const std::exception &e) {
      throw ParseError(cur.line_no(), std::string("bad value for ") + std::string(key) + ": " + e.what());
    }
  }
  if (!have_k || !have_branch) throw ParseError(cur.line_no(), "report lacks k or branch");
  if (guarantee_expr != "none") {
    if (!guarantee_value) throw ParseError(cur.line_no(), "guarantee without guarantee-value");
    r.guarantee = Guarantee{guarantee_expr, *guarantee_value};
  }
  r.stats.n = g.vertex_count();
  r.stats.edges = g.edge_count();

  r.core = read_set(index, cur.expect("core"), cur.line_no());
  r.subgraph = read_set(index, cur.expect("subgraph"), cur.line_no());
  const std::size_t removed = cur.number("removed");
  for (std::size_t i = 0; i < removed; ++i) r.removed.push_back(read_good_set(g, index, cur));
  if (r.branch == Branch::main) {
    r.bucket_index = cur.number("bucket");
    const std::size_t members = cur.number("collection");
    for (std::size_t i = 0; i < members; ++i) r.collection.push_back(read_good_set(g, index, cur));
    const std::string_view cover = cur.expect("cover-set");
    if (cover != "none") {
      CoverCertificate cert;
      cert.cover_set = read_set(index, cover, cur.line_no());
      const std::string_view peel = cur.expect("cover-peel");
      try {
        for (auto w : words(peel)) cert.peel_order.push_back(index.at(w));
      } catch (const PreconditionError &e) {
        throw ParseError(cur.line_no(), e.what());
      }
      cert.phi_value = static_cast<std::int64_t>(cur.number("cover-phi"));
      r.cover = std::move(cert);
    }
    for (auto w : words(cur.expect("chosen"))) {
      std::uint32_t j = 0;
      auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), j);
      if (ec != std::errc() || p != w.data() + w.size()) throw ParseError(cur.line_no(), "bad chosen index");
      r.chosen.push_back(j);
    }
  }
  if (cur.line() != "end") throw ParseError(cur.line_no(), "expected 'end'");
  r.stats.core_order = r.core.size();
  r.stats.output_order = r.subgraph.size();
  return r;
}

std::string format_verification(const VerificationReport &rep) {
  std::string out;
  for (const auto &c : rep.checks) {
    out += (c.passed ? "pass " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += '\n';
  }
  out += rep.ok() ? "verdict: ok\n" : "verdict: failed\n";
  return out;
}

} // namespace mindeg
