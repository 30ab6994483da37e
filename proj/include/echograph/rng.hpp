#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace echograph {

// Seeded RNG with portable integer/double conversions. std::mt19937_64 output
// is fully specified by the standard; the conversions below avoid
// std::*_distribution, whose algorithms are implementation-defined, so the
// same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform in [0, n). Rejection sampling keeps the result unbiased.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t overhang = (max % n + 1) % n;
    std::uint64_t x = next_u64();
    if (overhang != 0) {
      const std::uint64_t bound = max - overhang + 1;  // multiple of n
      while (x >= bound) x = next_u64();
    }
    return x % n;
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // First k entries of a shuffled copy of [0, n): a uniform sample without
  // replacement. k must be <= n.
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(uniform_index(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace echograph
