// Seeded random streams with a documented splitting contract.
//
// Every Monte Carlo replica draws from its own stream, derived from the
// master seed and a path of integer ids (row index, pass index, replica
// index, ...) via stream_seed().  Streams are therefore independent and
// reproducible regardless of thread scheduling.
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace cplab {

// SplitMix64 finalizer: the mixing function of the stream contract.
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// stream_seed(master, {i0, i1, ...}) = fold of mix64 over the id path.
inline uint64_t stream_seed(uint64_t master, std::initializer_list<uint64_t> path) {
    uint64_t s = mix64(master);
    for (uint64_t id : path) s = mix64(s ^ mix64(id));
    return s;
}

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe to pass to log().
    double uniform_open01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double exponential(double rate) {
        return -std::log(uniform_open01()) / rate;
    }

    // Unbiased uniform integer in [0, n), n >= 1 (Lemire rejection).
    uint64_t below(uint64_t n) {
        uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<uint64_t>(m);
        if (lo < n) {
            uint64_t t = (0 - n) % n;
            while (lo < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 gen_;
};

// Stream for replica r of a run with the given master seed.
inline Rng replica_rng(uint64_t master_seed, uint64_t replica) {
    return Rng(stream_seed(master_seed, {replica}));
}

} // namespace cplab
