#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mindeg/generate.hpp"
#include "mindeg/pipeline.hpp"

namespace mindeg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kHypothesis = 3,
  kPrecondition = 4,
  kClaimFailure = 5,
  kVerifyFailed = 6,
};

struct BenchGrid {
  std::vector<std::string> kinds{"wheel-plus-one"};
  std::vector<std::size_t> ks{2, 3, 4};
  std::vector<std::size_t> ns{16, 64, 256, 1024};
  std::size_t seeds = 1;
  std::size_t jobs = 1;
};

struct RunConfig {
  std::string command;
  std::size_t k = 0;
  // Exactly one of these is the input; "-" reads standard input.
  std::string input;
  std::optional<GenSpec> gen;

  Strategy strategy = Strategy::theorem3;
  bool peel_shortcut = false;
  std::uint64_t seed = 0;
  std::string report_path;
  std::string output_path;

  bool emit_traces = false;
  std::string oracle_mode = "min-order";
  std::size_t oracle_budget = 0;
  std::size_t trials = 100;
  std::vector<std::string> cover_set;
  std::string certificate_path;

  BenchGrid bench;
};

// Parses argv-style arguments (without the program name). Returns the exit
// code for --help or a usage error, writing the message to `err`.
std::optional<RunConfig> parse_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                    int *exit_code);

int run(const RunConfig &config, std::ostream &out, std::ostream &err);

// parse_args followed by run.
int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mindeg::cli
