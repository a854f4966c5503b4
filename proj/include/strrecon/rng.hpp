#pragma once

#include <cstdint>
#include <random>

namespace strrecon {

/// Deterministic random source for the randomized reconstruction.
///
/// Version 1 stream: std::mt19937_64 seeded with the 64-bit run seed.
/// Uniform reals take the top 53 bits, coin flips take the top bit, so a
/// run is bit-for-bit reproducible on any conforming standard library.
class Rng {
public:
    static constexpr int kStreamVersion = 1;

    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool coin() { return (engine_() >> 63) != 0; }
    std::uint64_t next() { return engine_(); }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    /// Seed of the `stream`-th child of `master`: splitmix64 applied to
    /// master + (stream + 1) * golden-ratio increment. Trials use
    /// stream = trial index, so results do not depend on scheduling.
    static std::uint64_t split(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t x = master + (stream + 1) * 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace strrecon
