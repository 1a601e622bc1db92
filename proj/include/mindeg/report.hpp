#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mindeg/graph.hpp"
#include "mindeg/pipeline.hpp"

namespace mindeg {

inline constexpr int kReportVersion = 1;

std::uint64_t fnv1a64(std::string_view bytes);
// 16 lowercase hex digits of fnv1a64 over the set's labels, one per line.
std::string set_digest(const Graph &g, const VertexSet &s);
// Digest of the canonical edge list (labels, u < v by id, sorted).
std::string graph_digest(const Graph &g);

struct ReportContext {
  std::string command = "extract";
  std::string input;
  Strategy strategy = Strategy::theorem3;
  std::uint64_t seed = 0;
};

// "key: value" lines headed by "mindeg-report <version>", then a
// certificate section that parse_extraction_report reads back. Vertices are
// written as labels. No timings, so equal inputs give equal bytes.
std::string format_extraction_report(const Graph &g, const ExtractionResult &r, const ReportContext &ctx);

// Rebuilds the certificate part of a report. Stage statistics other than n
// are not restored. Throws ParseError on malformed text.
ExtractionResult parse_extraction_report(const Graph &g, std::string_view text);

std::string format_verification(const VerificationReport &rep);

} // namespace mindeg
