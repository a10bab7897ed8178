#pragma once

#include <array>
#include <cstdint>

namespace typicality {

// Philox4x32-10 keyed by (seed, stream). Outputs depend only on
// (seed, stream, position), so sample streams are reproducible regardless of
// how work is divided among threads.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    // k-th uniform of this stream, in [0, 1); random access.
    double uniform_at(std::uint64_t k) const;

    // Sequential draws.
    double uniform() { return uniform_at(next_++); }

    // One normal deviate per call, Box-Muller on two fresh uniforms.
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return normal_from(u1, u2);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    static double normal_from(double u1, double u2);

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t next_ = 0;
};

}  // namespace typicality
