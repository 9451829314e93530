#pragma once

#include <cstdint>

namespace hamlab {

// Name reported in verification reports. Reports are only comparable
// across builds that pin the same generator.
inline constexpr const char* kRngName = "splitmix64";

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the full output
// sequence is defined by the reference constants alone, so seeded runs
// are byte-stable across compilers and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint32_t next_u32() { return static_cast<uint32_t>(next() >> 32); }

  // Uniform draw in [0, bound) by rejection; bound >= 1.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = ~0ull - (~0ull % bound);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  bool next_bool() { return next() >> 63; }

 private:
  uint64_t state_;
};

// Decorrelates per-item substreams (sampled enumeration draw i uses
// substream_seed(seed, i)); splitting keeps chunked parallel runs
// independent of worker count.
inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
  SplitMix64 mix(seed ^ (index * 0x9E3779B97F4A7C15ull) ^ 0xD1B54A32D192ED03ull);
  return mix.next();
}

}  // namespace hamlab
