#pragma once

#include <cstdint>
#include <random>

namespace arcwalk {

// SplitMix64 finalizer. Bijective on 64-bit words; used to turn structured
// seed material (master seed, replicate index) into well-mixed engine seeds.
std::uint64_t mix64(std::uint64_t z) noexcept;

// Seed for the index-th replicate of a master-seeded experiment. The mapping
// is pure, so replicate streams never depend on worker count or scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/**
 * Deterministic random stream with fixed draw disciplines.
 *
 * uniform() consumes exactly one engine word and yields a 53-bit value in
 * [0,1). uniform_open() rejects an exact 0 and retries (probability 2^-53
 * per draw). normal() is Box-Muller: engine words are consumed in pairs and
 * the second variate is cached, so normals cost one word on average.
 * Replaying with the same seed reproduces the stream bit-identically.
 */
class rng {
public:
    explicit rng(std::uint64_t seed) : gen_(mix64(seed)) {}

    std::uint64_t next_u64() { return gen_(); }

    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform_open() {
        for (;;) {
            double u = uniform();
            if (u > 0.0) return u;
        }
    }

    double normal();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace arcwalk
