#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace qsr {

// All randomness in this project flows through Rng, a thin wrapper over
// std::mt19937_64. The standard pins that generator's output sequence, and the
// helpers below avoid std::uniform_*_distribution (whose draws are
// implementation-defined), so a seed reproduces the same stream on any
// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bias-free via rejection. bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::mt19937_64 gen_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Folds words into a single seed with splitmix64. Substreams used by the
// experiment harness: cell seed = derive_seed({master, N, M, seed_index}),
// graph stream = derive_seed({cell, 0}), marked-node stream =
// derive_seed({cell, 1}).
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words);

// `count` distinct values from [0, population), sorted ascending.
std::vector<int> sample_distinct(int population, int count, Rng& rng);

}  // namespace qsr
