#pragma once

#include <cstdint>
#include <string>

#include "mindeg/graph.hpp"

namespace mindeg {

enum class GenKind { wheel, wheel_plus_one, random_fixed_edges };

struct GenSpec {
  GenKind kind = GenKind::wheel;
  std::size_t k = 3;
  std::size_t n = 0;
  // Edge count, used by random_fixed_edges only.
  std::size_t m = 0;
  std::uint64_t seed = 0;

  // One-line description recorded as the edge-list header.
  std::string describe() const;
};

// K_{k-2} joined with C_{n-k+2}: apex vertices 0..k-3, cycle k-2..n-1 in
// cyclic order. Has t_k(n) edges and minimum degree k. Requires n >= k+2.
Graph gen_wheel(std::size_t k, std::size_t n);

// gen_wheel plus one uniformly chosen non-edge.
Graph gen_extremal_plus_one(std::size_t k, std::size_t n, std::uint64_t seed);

// Uniform simple graph on n vertices with exactly m edges.
Graph gen_random_with_edges(std::size_t n, std::size_t m, std::uint64_t seed);

Graph generate(const GenSpec &spec);

GenKind parse_gen_kind(const std::string &name);
std::string to_string(GenKind kind);

} // namespace mindeg
