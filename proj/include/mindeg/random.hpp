#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mindeg {

// All randomness flows from one explicitly seeded 64-bit Mersenne Twister.
// Bounded draws are done here rather than through std distributions, whose
// output differs between standard library implementations.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Requires bound > 0.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Uniform real in [0, 1).
inline double uniform_unit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class T>
void shuffle(std::vector<T> &items, Rng &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

} // namespace mindeg
