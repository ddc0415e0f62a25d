#pragma once
// Counter-based pseudo-random generator built on the SplitMix64 output
// function (Steele, Lea & Flood 2014; the mixer is Stafford's MurmurHash3
// variant 13). Each draw hashes (key, counter), so streams are splittable:
// derived streams use an independently mixed key and start from counter 0.
// The generator is deterministic across platforms; the distribution helpers
// below avoid the standard library's implementation-defined distributions.

#include <cstdint>

namespace hcl {

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed + GOLDEN) ^ mix(stream + GOLDEN))), counter_(0) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return mix(key_ + (++counter_) * GOLDEN); }

  // Independent stream derived from this generator's key; advancing one
  // does not affect the other.
  CounterRng split(std::uint64_t stream) const {
    CounterRng r(0);
    r.key_ = mix(key_ ^ mix(stream + GOLDEN));
    r.counter_ = 0;
    return r;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return double((*this)() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection from the top of the range.
  std::uint64_t uniform_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

 private:
  static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace hcl
