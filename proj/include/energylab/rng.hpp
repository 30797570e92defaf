#pragma once

#include <cstdint>
#include <vector>

namespace energylab {

/// Splittable seeded generator (splitmix64). Every randomized mode takes one
/// of these so runs replay bit-identically across platforms; no libc or
/// libstdc++ distribution is involved anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased enough for harness use: 128-bit multiply reduction.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Derive an independent stream.
    Rng split() { return Rng(next() ^ 0xd1b54a32d192ed03ull); }

    // k distinct indices out of n (partial Fisher-Yates), ascending.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

private:
    std::uint64_t state_;
};

}  // namespace energylab
