#pragma once

#include <cstdint>

namespace mploc {

// splitmix64: cheap, well-mixed stream derivation. Every Monte Carlo sample
// gets its own stream seeded from (master_seed, stream_id), so results do not
// depend on scheduling order.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= stream * 0xda942042e4dd58b5ull;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9e3779b97f4a7c15ull);
}

// xoshiro-free minimal generator: iterated splitmix64. Uniform draws are
// mapped from the top 53 bits so the sequence is identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    // [0, 1)
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // [-1, 1)
    double symmetric() { return 2.0 * unit() - 1.0; }

private:
    std::uint64_t state_;
};

} // namespace mploc
