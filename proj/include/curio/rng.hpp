#pragma once

#include <cstdint>
#include <initializer_list>

namespace curio {

// Counter-based draws: every random decision is a pure hash of the scenario
// seed and the coordinates of the decision, so runs can be split and replayed
// without sharing generator state.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_draw(std::uint64_t seed, std::initializer_list<std::uint64_t> coords) noexcept {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t c : coords) h = splitmix64(h ^ splitmix64(c));
  return h;
}

// Uniform in [0, 1) with 53 bits; identical on every platform.
constexpr double unit_interval(std::uint64_t draw) noexcept {
  return static_cast<double>(draw >> 11) * 0x1.0p-53;
}

}  // namespace curio
