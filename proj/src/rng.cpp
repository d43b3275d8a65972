#include "qsr/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsr {

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    // Rejection sampling over the largest multiple of bound below 2^64.
    const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
    std::uint64_t x;
    do {
        x = gen_();
    } while (limit != 0 && x >= limit);
    return x % bound;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::uint64_t w : words) h = splitmix64(h ^ w);
    return h;
}

std::vector<int> sample_distinct(int population, int count, Rng& rng) {
    if (count < 0 || count > population)
        throw std::invalid_argument("sample_distinct: count out of range");
    // Partial Fisher-Yates over an index vector.
    std::vector<int> pool(population);
    for (int i = 0; i < population; ++i) pool[i] = i;
    for (int i = 0; i < count; ++i) {
        const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(population - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace qsr
