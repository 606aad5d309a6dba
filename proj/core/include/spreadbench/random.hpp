#pragma once

#include <cstddef>
#include <cstdint>

namespace spreadbench {

/// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Derives an independent stream key from a parent key and a counter.
constexpr std::uint64_t derive_key(std::uint64_t parent, std::uint64_t counter) noexcept {
  return mix64(mix64(parent + kGoldenGamma) ^ (counter * 0xd1342543de82ef95ULL + 1));
}

/// Maps 64 random bits to a double in [0, 1) with 53 bits of resolution.
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Counter-based uniform stream: `uniform(i)` is the i-th output of a
/// SplitMix64 sequence started at `key`, so any draw can be addressed
/// directly without advancing state.
class CoinStream {
 public:
  explicit constexpr CoinStream(std::uint64_t key) noexcept : key_(key) {}

  constexpr double uniform(std::uint64_t counter) const noexcept {
    return to_unit_interval(mix64(key_ + (counter + 1) * kGoldenGamma));
  }

  constexpr std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

}  // namespace spreadbench
