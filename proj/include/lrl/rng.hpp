#pragma once

#include <cstdint>

namespace lrl {

// SplitMix64: tiny counter-friendly generator. Instance streams are keyed by
// (seed, index), so ensemble results do not depend on evaluation order or
// thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // [0, 1)
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // [0, span)
  std::uint64_t uniform_index(std::uint64_t span) {
    return span == 0 ? 0 : next() % span;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 instance_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(
      SplitMix64::mix(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
}

}  // namespace lrl
