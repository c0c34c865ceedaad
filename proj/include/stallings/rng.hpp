#ifndef STALLINGS_RNG_HPP
#define STALLINGS_RNG_HPP

#include <cstdint>
#include <vector>

namespace stallings {

/// Deterministic, seedable, splittable generator (splitmix64 core).
/// Identical output on every platform for a given seed; every randomized
/// report records its seed so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased uniform draw from {0, ..., bound-1} via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  double next_double() {  // [0,1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Independent stream derived from this generator's seed and a stream id.
  Rng split(std::uint64_t stream) const {
    Rng mix(state_ ^ (0xda3e39cb94b95bdbULL * (stream + 1)));
    mix.next_u64();
    return Rng(mix.next_u64());
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace stallings

#endif
