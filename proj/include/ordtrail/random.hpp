#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace ordtrail {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Bounded draws use rejection sampling on the raw 64-bit output instead of
/// std::uniform_int_distribution (whose algorithm is implementation defined),
/// so shuffles are bit-identical across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform value in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Fisher-Yates, iterating from the back: for k = size-1 down to 1, swap
  /// element k with element below(k + 1).
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      const auto j = static_cast<std::size_t>(below(k));
      std::swap(items[k - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform random permutation of 1..size.
inline std::vector<std::uint32_t> random_permutation(std::size_t size, Rng& rng) {
  std::vector<std::uint32_t> perm(size);
  std::iota(perm.begin(), perm.end(), 1u);
  rng.shuffle(std::span<std::uint32_t>(perm));
  return perm;
}

/// SplitMix64 finalizer; derives independent per-task seeds from one seed.
inline constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace ordtrail
