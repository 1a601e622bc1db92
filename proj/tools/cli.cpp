#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mindeg/cover.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/goodset.hpp"
#include "mindeg/oracle.hpp"
#include "mindeg/report.hpp"

namespace mindeg::cli {

namespace {

struct Input {
  Graph graph;
  std::string description;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes through a sibling temporary so readers never see a partial file.
void write_atomic(const std::string &path, const std::string &text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot write " + tmp);
    out << text;
    if (!out) throw std::ios_base::failure("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::ios_base::failure("cannot rename " + tmp + " to " + path);
}

std::size_t default_edges(std::size_t k, std::size_t n) {
  if (k >= 2 && n >= k + 1) return static_cast<std::size_t>(t_threshold(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n))) + 1;
  return 0;
}

Input load_input(const RunConfig &c) {
  if (c.gen) return {generate(*c.gen), c.gen->describe()};
  std::string text;
  if (c.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    text = read_file(c.input);
  }
  return {load_graph(text).graph, c.input};
}

std::string labels(const Graph &g, const VertexSet &s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

int cmd_extract(const RunConfig &c, std::ostream &out) {
  const Input in = load_input(c);
  ExtractOptions opts;
  opts.peel_shortcut = c.peel_shortcut;
  const ExtractionResult r = extract(in.graph, c.k, c.strategy, opts);
  ReportContext ctx{"extract", in.description, c.strategy, c.seed};
  const std::string report = format_extraction_report(in.graph, r, ctx);
  if (c.report_path.empty()) {
    out << report;
  } else {
    write_atomic(c.report_path, report);
    out << "branch: " << to_string(r.branch) << "\noutput-order: " << r.subgraph.size() << '\n';
  }
  return kOk;
}

int cmd_kcore(const RunConfig &c, std::ostream &out) {
  const Input in = load_input(c);
  const VertexSet core = k_core(in.graph, c.k);
  out << "order: " << core.size() << "\nvertices: " << labels(in.graph, core) << '\n';
  return kOk;
}

int cmd_goodsets(const RunConfig &c, std::ostream &out) {
  const Input in = load_input(c);
  const auto sets = maximal_good_sets(in.graph, c.k);
  out << "count: " << sets.size() << '\n';
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out << "set " << i << " size " << sets[i].vertices.size() << ": " << labels(in.graph, sets[i].vertices) << '\n';
    if (c.emit_traces) out << format_trace(in.graph, sets[i].trace);
  }
  return kOk;
}

int cmd_cover(const RunConfig &c, std::ostream &out) {
  const Input in = load_input(c);
  const CoverCertificate cert = build_cover_set(in.graph, c.k);
  std::string order;
  for (Vertex v : cert.peel_order) order += (order.empty() ? "" : " ") + in.graph.label(v);
  out << "cover-set: " << labels(in.graph, cert.cover_set) << "\nsize: " << cert.cover_set.size()
      << "\nphi: " << cert.phi_value << "\npeel-order: " << order << '\n';
  return kOk;
}

int cmd_oracle(const RunConfig &c, std::ostream &out) {
  const Input in = load_input(c);
  OracleBudget budget;
  if (c.oracle_budget > 0) budget.max_vertices = c.oracle_budget;
  budget.trial_count = c.trials;
  budget.seed = c.seed;
  if (c.oracle_mode == "min-order") {
    const auto best = min_order_mindeg_subgraph(in.graph, c.k, budget);
    if (!best) out << "result: none\n";
    else out << "order: " << best->size() << "\nvertices: " << labels(in.graph, *best) << '\n';
    return kOk;
  }
  if (c.oracle_mode == "closure") {
    const auto sets = brute_good_closure(in.graph, c.k, budget);
    out << "count: " << sets.size() << '\n';
    for (std::size_t i = 0; i < sets.size(); ++i) out << "set " << i << ": " << labels(in.graph, sets[i]) << '\n';
    return kOk;
  }
  if (c.oracle_mode == "cover") {
    const LabelIndex index(in.graph);
    std::vector<Vertex> ids;
    for (const auto &l : c.cover_set) ids.push_back(index.at(l));
    const CoverCheckResult res = random_cover_check(in.graph, VertexSet(std::move(ids)), c.k, budget);
    out << "trials: " << res.trials << '\n';
    if (res.passed()) {
      out << "result: pass\n";
      return kOk;
    }
    out << "result: counterexample\n" << res.counterexample->serialize();
    return kVerifyFailed;
  }
  throw PreconditionError("unknown oracle mode '" + c.oracle_mode + "'");
}

int cmd_gen(const RunConfig &c, std::ostream &out) {
  const GenSpec &spec = *c.gen;
  const std::string text = format_edge_list(generate(spec), spec.describe());
  if (c.output_path.empty()) out << text;
  else write_atomic(c.output_path, text);
  return kOk;
}

int cmd_verify(const RunConfig &c, std::ostream &out) {
  const Input in = load_input(c);
  const ExtractionResult r = parse_extraction_report(in.graph, read_file(c.certificate_path));
  const VerificationReport rep = verify_certificate(in.graph, c.k, r);
  out << format_verification(rep);
  return rep.ok() ? kOk : kVerifyFailed;
}

struct BenchRow {
  std::string text;
  bool failed = false;
};

BenchRow bench_one(const GenSpec &spec, Strategy strategy) {
  char buf[256];
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Graph g = generate(spec);
    const ExtractionResult r = extract(g, spec.k, strategy);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const double bound = static_cast<double>(spec.n) -
                         size_bound(static_cast<std::int64_t>(spec.k), static_cast<std::int64_t>(spec.n), BoundKind::main);
    const bool ok = induces_min_degree(g, r.subgraph, spec.k);
    std::snprintf(buf, sizeof buf, "%s\t%zu\t%zu\t%llu\t%s\t%zu\t%.3f\t%.1f\t%s", to_string(spec.kind).c_str(), spec.n,
                  spec.k, static_cast<unsigned long long>(spec.seed), to_string(r.branch).c_str(), r.subgraph.size(),
                  bound, ms, ok ? "ok" : "FAIL");
    return {buf, !ok};
  } catch (const Error &e) {
    std::snprintf(buf, sizeof buf, "%s\t%zu\t%zu\t%llu\terror\t-\t-\t-\t%s", to_string(spec.kind).c_str(), spec.n,
                  spec.k, static_cast<unsigned long long>(spec.seed), e.what());
    return {buf, true};
  }
}

int cmd_bench(const RunConfig &c, std::ostream &out) {
  std::vector<GenSpec> grid;
  for (const auto &kind : c.bench.kinds)
    for (std::size_t k : c.bench.ks)
      for (std::size_t n : c.bench.ns)
        for (std::size_t s = 0; s < c.bench.seeds; ++s) {
          GenSpec spec;
          spec.kind = parse_gen_kind(kind);
          spec.k = k;
          spec.n = n;
          spec.seed = c.seed + s;
          spec.m = default_edges(k, n);
          grid.push_back(spec);
        }
  std::vector<BenchRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) rows[i] = bench_one(grid[i], c.strategy);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(c.bench.jobs, grid.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto &t : pool) t.join();

  out << "kind\tn\tk\tseed\tbranch\toutput\tbound\tms\tstatus\n";
  bool failed = false;
  for (const auto &row : rows) {
    out << row.text << '\n';
    failed = failed || row.failed;
  }
  return failed ? kClaimFailure : kOk;
}

void add_input(CLI::App *sub, RunConfig &c, std::string &gen_kind, std::size_t &gen_n, std::size_t &gen_m) {
  auto *in = sub->add_option("--in", c.input, "Edge-list file, or - for stdin");
  auto *gen = sub->add_option("--gen", gen_kind, "Generate the input instead: wheel, wheel-plus-one, random");
  in->excludes(gen);
  gen->excludes(in);
  sub->add_option("--n", gen_n, "Vertex count for --gen");
  sub->add_option("--m", gen_m, "Edge count for --gen random (default t_k(n)+1)");
  sub->add_option("--seed", c.seed, "Random seed");
}

} // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                    int *exit_code) {
  RunConfig c;
  std::string gen_kind, strategy = "theorem3";
  std::size_t gen_n = 0, gen_m = 0;

  CLI::App app{"Minimum-degree subgraph extraction"};
  app.name("mindeg");
  app.require_subcommand(1, 1);
  auto k_opt = [&](CLI::App *sub) { return sub->add_option("--k", c.k, "Minimum degree")->required()->check(CLI::Range(2, 1 << 20)); };

  auto *extract_cmd = app.add_subcommand("extract", "Find a smaller subgraph of minimum degree k");
  k_opt(extract_cmd);
  add_input(extract_cmd, c, gen_kind, gen_n, gen_m);
  extract_cmd->add_option("--strategy", strategy, "theorem3 or greedy-chain");
  extract_cmd->add_option("--report", c.report_path, "Write the report here instead of stdout");
  extract_cmd->add_flag("--peel-shortcut", c.peel_shortcut, "Stop after peeling when it already removed enough");

  auto *kcore_cmd = app.add_subcommand("kcore", "Print the k-core");
  k_opt(kcore_cmd);
  add_input(kcore_cmd, c, gen_kind, gen_n, gen_m);

  auto *goodsets_cmd = app.add_subcommand("goodsets", "List maximal good sets");
  k_opt(goodsets_cmd);
  add_input(goodsets_cmd, c, gen_kind, gen_n, gen_m);
  goodsets_cmd->add_flag("--emit-traces", c.emit_traces, "Print each set's derivation");

  auto *cover_cmd = app.add_subcommand("cover", "Cover set of a graph with empty k-core");
  k_opt(cover_cmd);
  add_input(cover_cmd, c, gen_kind, gen_n, gen_m);

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force checks on small graphs");
  k_opt(oracle_cmd);
  add_input(oracle_cmd, c, gen_kind, gen_n, gen_m);
  oracle_cmd->add_option("--mode", c.oracle_mode, "min-order, closure or cover")
      ->check(CLI::IsMember({"min-order", "closure", "cover"}));
  oracle_cmd->add_option("--budget", c.oracle_budget, "Vertex cap (default MINDEG_ORACLE_BUDGET or 20)");
  oracle_cmd->add_option("--trials", c.trials, "Cover trials");
  oracle_cmd->add_option("--S", c.cover_set, "Cover set labels for --mode cover");

  auto *gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--kind", gen_kind, "wheel, wheel-plus-one or random")->required();
  gen_cmd->add_option("--k", c.k, "Minimum degree (wheel kinds)");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required();
  gen_cmd->add_option("--m", gen_m, "Edge count for random (default t_k(n)+1)");
  gen_cmd->add_option("--seed", c.seed, "Random seed");
  gen_cmd->add_option("--out", c.output_path, "Output file (default stdout)");

  auto *verify_cmd = app.add_subcommand("verify", "Re-check an extract report");
  k_opt(verify_cmd);
  add_input(verify_cmd, c, gen_kind, gen_n, gen_m);
  verify_cmd->add_option("--report", c.certificate_path, "Report written by extract")->required();

  auto *bench_cmd = app.add_subcommand("bench", "Run extract over an instance grid");
  bench_cmd->add_option("--kinds", c.bench.kinds, "Generator kinds");
  bench_cmd->add_option("--ks", c.bench.ks, "Values of k")->check(CLI::Range(2, 1 << 20));
  bench_cmd->add_option("--ns", c.bench.ns, "Values of n");
  bench_cmd->add_option("--seeds", c.bench.seeds, "Seeds per cell");
  bench_cmd->add_option("--seed", c.seed, "First seed");
  bench_cmd->add_option("--jobs", c.bench.jobs, "Parallel workers");
  bench_cmd->add_option("--strategy", strategy, "theorem3 or greedy-chain");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    *exit_code = app.exit(e, out, err) == 0 ? kOk : kUsage;
    return std::nullopt;
  }

  c.command = app.get_subcommands().front()->get_name();
  try {
    c.strategy = parse_strategy(strategy);
    if (!gen_kind.empty()) {
      GenSpec spec;
      spec.kind = parse_gen_kind(gen_kind);
      spec.k = c.k;
      spec.n = gen_n;
      spec.seed = c.seed;
      spec.m = gen_m;
      if (spec.kind == GenKind::random_fixed_edges && gen_m == 0) spec.m = default_edges(c.k, gen_n);
      c.gen = spec;
    }
  } catch (const Error &e) {
    err << "mindeg: " << e.what() << '\n';
    *exit_code = kUsage;
    return std::nullopt;
  }
  if (c.command != "gen" && c.command != "bench" && c.input.empty() && !c.gen) {
    err << "mindeg: one of --in or --gen is required\n";
    *exit_code = kUsage;
    return std::nullopt;
  }
  *exit_code = kOk;
  return c;
}

int run(const RunConfig &c, std::ostream &out, std::ostream &err) {
  try {
    if (c.command == "extract") return cmd_extract(c, out);
    if (c.command == "kcore") return cmd_kcore(c, out);
    if (c.command == "goodsets") return cmd_goodsets(c, out);
    if (c.command == "cover") return cmd_cover(c, out);
    if (c.command == "oracle") return cmd_oracle(c, out);
    if (c.command == "gen") return cmd_gen(c, out);
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "bench") return cmd_bench(c, out);
    err << "mindeg: unknown command '" << c.command << "'\n";
    return kUsage;
  } catch (const HypothesisError &e) {
    err << "mindeg: hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const ClaimViolation &e) {
    err << "mindeg: internal check failed: " << e.what() << '\n';
    return kClaimFailure;
  } catch (const ParseError &e) {
    err << "mindeg: parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error &e) {
    err << "mindeg: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::ios_base::failure &e) {
    err << "mindeg: " << e.what() << '\n';
    return kIoError;
  }
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  int code = kOk;
  auto config = parse_args(args, out, err, &code);
  if (!config) return code;
  return run(*config, out, err);
}

} // namespace mindeg::cli
