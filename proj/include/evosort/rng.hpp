#pragma once

// Seeded xoshiro256++ generator. Chosen over std::mt19937 +
// std::uniform_int_distribution because the distribution adapters are
// implementation-defined; this generator and the bounded-draw below are fully
// specified, so identical seeds give identical sequences on every build.
//
// References: Blackman & Vigna, "Scrambled linear pseudorandom number
// generators" (xoshiro256++), and Steele et al.'s splitmix64 for seeding.

#include <array>
#include <cstdint>

namespace evosort {

class Xoshiro256 {
public:
  explicit Xoshiro256(std::uint64_t seed) {
    // splitmix64 expansion of the 64-bit seed into the 256-bit state
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, range) via Lemire's multiply-shift with rejection.
  std::uint64_t bounded(std::uint64_t range) {
    if (range == 0) return 0;
    while (true) {
      const std::uint64_t x = next();
      const unsigned __int128 m =
          static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(range);
      const std::uint64_t low = static_cast<std::uint64_t>(m);
      if (low >= range || low >= (0u - range) % range) {
        return static_cast<std::uint64_t>(m >> 64);
      }
    }
  }

  // Inclusive integer range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == ~0ull) return static_cast<std::int64_t>(next());
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + bounded(span + 1));
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin(double probability) { return uniform01() < probability; }

  // Deterministic sub-seed derivation for independent streams.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace evosort
