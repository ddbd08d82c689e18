#pragma once

#include <cstdint>
#include <initializer_list>

namespace simphom {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Hash of a seed and a list of integer keys. Used as a counter-based RNG: the draw for
/// a given key never depends on evaluation order, so parallel loops stay reproducible.
constexpr std::uint64_t keyed_hash(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t k : keys) h = mix64(h ^ mix64(k));
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits of keyed_hash.
constexpr double keyed_uniform(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) noexcept {
  return static_cast<double>(keyed_hash(seed, keys) >> 11) * 0x1.0p-53;
}

}  // namespace simphom
