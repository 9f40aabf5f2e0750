#pragma once

#include <cstdint>

namespace orelab {

// splitmix64. Chosen over <random> engines because its output stream is
// fully specified by the algorithm, so seeds reproduce across platforms
// and standard library versions. All sampled evidence in reports records
// the seed that produced it.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is irrelevant at our ranges (n far
    // below 2^32) and keeps the draw count per call fixed, which matters
    // for reproducibility.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

} // namespace orelab
