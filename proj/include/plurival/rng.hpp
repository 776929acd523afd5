#ifndef PLURIVAL_RNG_HPP
#define PLURIVAL_RNG_HPP

#include <cstdint>

namespace plurival {

// Counter-based generator: the k-th draw of a stream is a pure function of
// (seed, worker, k), so parallel schedules cannot change any draw.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t worker)
      : key_(mix(seed ^ (0x9E3779B97F4A7C15ULL * (worker + 1)))) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(key_ + 0xD1342543DE82EF95ULL * counter_++); }

  // Uniform on the open interval (0,1); never exactly 0 or 1.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace plurival

#endif  // PLURIVAL_RNG_HPP
