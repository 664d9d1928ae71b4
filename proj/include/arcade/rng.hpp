#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace arcade {

// Seeded generator shared by every engine. std::mt19937_64 is fully specified
// by the standard, but the standard distributions are not, so bounded draws
// and shuffles are done here to keep sessions reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(Next());
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t draw = Next();
    while (draw >= limit) draw = Next();
    return lo + static_cast<std::int64_t>(draw % span);
  }

  std::size_t Index(std::size_t size) {
    return static_cast<std::size_t>(Uniform(0, static_cast<std::int64_t>(size) - 1));
  }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Derives independent sub-seeds from one recorded session seed.
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace arcade
