#pragma once

#include <cstdint>
#include <random>

namespace tailfit::detail {

// 53-bit mantissa uniform on [0,1).
inline double uniform53(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Sub-seed stream: successive calls on the same state yield well-mixed
// independent seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Maps one 64-bit draw onto [0, n) without fmod bias.
inline std::size_t bounded_index(std::mt19937_64& gen, std::size_t n) {
    using u128 = unsigned __int128;
    return static_cast<std::size_t>((static_cast<u128>(gen()) * static_cast<u128>(n)) >> 64);
}

}  // namespace tailfit::detail
