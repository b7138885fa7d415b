#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace hopgraph {

/// mt19937_64 is specified bit-exactly by the standard; the distributions are
/// not, so the helpers below derive values from raw engine output.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_index(rng, i)]);
}

}  // namespace hopgraph
