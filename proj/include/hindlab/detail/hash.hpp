#ifndef HINDLAB_DETAIL_HASH_HPP
#define HINDLAB_DETAIL_HASH_HPP

#include <cstdint>

namespace hindlab::detail {

// splitmix64 finalizer. Stateless, so evaluation order never matters and
// identical (seed, input) pairs hash identically across processes.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Keyed absorbing hash over 64-bit words.
struct KeyedHash {
  std::uint64_t state;

  explicit KeyedHash(std::uint64_t seed) : state(mix64(seed)) {}

  KeyedHash& absorb(std::uint64_t w) {
    state = mix64(state ^ w);
    return *this;
  }

  std::uint64_t digest() const { return state; }
};

}  // namespace hindlab::detail

#endif
