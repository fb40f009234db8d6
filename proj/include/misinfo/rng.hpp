#pragma once

// Seeded shuffling and sampling that give the same result on every standard
// library (the std distributions are implementation-defined).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace misinfo::rng {

using Engine = std::mt19937_64;

// Uniform integer in [0, n) by rejection; n >= 1.
inline std::uint64_t bounded(Engine& eng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
void shuffle(std::vector<T>& v, Engine& eng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded(eng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// k distinct indices from [0, n), returned ascending. k is clamped to n.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  k = std::min(k, n);
  Engine eng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(bounded(eng, n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace misinfo::rng
