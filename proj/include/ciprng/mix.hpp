#pragma once

#include <cstdint>
#include <span>

namespace ciprng {

// FNV-1a, 64-bit. Used to fold arbitrary-length seed material and to
// fingerprint embedded tables.
constexpr uint64_t fnv1a64(std::span<const uint8_t> data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint8_t b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

// SplitMix64 (Steele, Lea, Flood). Expands one 64-bit value into a stream
// of well-mixed words; standard choice for seeding larger states.
struct SplitMix64 {
    uint64_t state = 0;

    constexpr uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace ciprng
