#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cvos {

// Seeded generator with hand-rolled distributions.  std::uniform_real_distribution
// and friends are implementation-defined, which would break the byte-identical
// reproducibility contract for seeded experiments.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0,1), 53 bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint32_t below(std::uint32_t n) {
        if (n <= 1) return 0;
        const std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return static_cast<std::uint32_t>(v % n);
    }

    double exponential() {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return -std::log(u);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace cvos
