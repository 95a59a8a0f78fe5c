#pragma once

#include "ipl/rational.hpp"

#include <cstdint>
#include <vector>

namespace ipl {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED; // 24301

/// SplitMix64 stream. Deterministic across platforms, so seeded reports are
/// reproducible byte-for-byte.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    long integer(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small exact rational, numerator in [-num_max, num_max], denominator in [1, den_max].
    Rational rational(long num_max = 20, long den_max = 12) {
        return Rational(integer(-num_max, num_max), integer(1, den_max));
    }

    Rational nonzero_rational(long num_max = 20, long den_max = 12) {
        for (;;) {
            Rational r = rational(num_max, den_max);
            if (r != 0) return r;
        }
    }

    std::vector<double> box_point(const std::vector<double>& lo, const std::vector<double>& hi) {
        std::vector<double> p(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) p[i] = uniform(lo[i], hi[i]);
        return p;
    }

  private:
    std::uint64_t state_;
};

} // namespace ipl
