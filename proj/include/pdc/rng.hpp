#pragma once
// rng.hpp — splittable counter-based random streams
//
// Every consumer of randomness takes an explicit stream; there is no global
// state. A stream is (key, counter): output i is a mix of key and i, so a
// stream can be copied, replayed, or forked without touching its parent.

#include <cstdint>
#include <string_view>

namespace pdc {

inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : key_(key) {}

  static RandomStream from_seed(std::uint64_t master_seed) {
    return RandomStream(mix64(master_seed + kGolden64));
  }

  // Children are keyed off (parent key, label); derivation never advances the
  // parent counter, so the same label always yields the same child.
  RandomStream derive(std::string_view label) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the label bytes
    for (unsigned char c : label) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return RandomStream(mix64((key_ + kGolden64) ^ mix64(h + 0x6a09e667f3bcc909ULL)));
  }

  RandomStream derive(std::uint64_t index) const {
    return RandomStream(mix64((key_ + kGolden64) ^ mix64(index + 0x5851f42d4c957f2dULL)));
  }

  std::uint64_t next_u64() { return mix64(key_ + (++ctr_) * kGolden64); }

  // Uniform double in [0,1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0,n), unbiased (multiply-shift with rejection).
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t x = next_u64();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        x = next_u64();
        m = static_cast<unsigned __int128>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace pdc
