#ifndef SYMLOC_RNG_HPP
#define SYMLOC_RNG_HPP

#include <cstdint>
#include <random>

namespace symloc {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; decorrelates nearby keys.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ mix64(a));
  s = mix64(s ^ mix64(b));
  return s;
}

/// Counter-based substream: the same (master, a, b) always yields the same
/// generator, independent of which worker asks for it.
inline Rng make_stream(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0) {
  return Rng(derive_seed(master, a, b));
}

}  // namespace symloc

#endif
