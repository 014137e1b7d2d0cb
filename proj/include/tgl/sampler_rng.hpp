#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tgl {

// Seedable, platform-stable randomness: a std::mt19937_64 engine (whose
// output sequence the standard fully specifies) seeded through splitmix64,
// with bounded draws done by explicit rejection sampling instead of
// std::uniform_int_distribution (implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Derives an independent stream for one sample: splitmix64 chained over
    // seed, n and index with fixed odd constants.
    static Rng stream(std::uint64_t seed, std::uint64_t n, std::uint64_t index);

    static std::uint64_t splitmix64(std::uint64_t x);

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, m); m >= 1.
    std::uint64_t below(std::uint64_t m);

    // Uniformly random permutation of 0..n-1 (Fisher-Yates).
    std::vector<int> permutation(int n);

    static constexpr const char* generator_name() { return "mt19937_64/splitmix64-stream"; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tgl
