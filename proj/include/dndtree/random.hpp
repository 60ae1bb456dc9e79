#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace dndtree {

// std::mt19937_64 has a fully specified output sequence; the standard
// distributions do not, so bounded draws and shuffles are done here to keep
// seeded runs identical across standard libraries.
using Rng = std::mt19937_64;

/// Unbiased draw from [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

/// Fisher-Yates on the first k slots: afterwards items[0, k) is a uniform
/// sample without replacement, in random order.
template <class T>
void partial_shuffle(Rng& rng, std::span<T> items, std::size_t k) {
  for (std::size_t i = 0; i < k && i + 1 < items.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, items.size() - i));
    std::swap(items[i], items[j]);
  }
}

}  // namespace dndtree
