#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>

namespace ciprng {

// Mask-word sources. Each is a small published generator with its exact
// reference recurrence; the masked-update core treats them as a stream of
// 32-bit update masks.

// L'Ecuyer's LFSR113, period near 2^113. Lanes must satisfy the listed
// lower bounds or the recurrence degenerates.
struct Lfsr113 {
    static constexpr std::array<uint32_t, 4> kLaneBounds = {2, 8, 16, 128};
    std::array<uint32_t, 4> z = {2, 8, 16, 128};

    constexpr uint32_t next() {
        uint32_t b;
        b = ((z[0] << 6) ^ z[0]) >> 13;
        z[0] = ((z[0] & 0xFFFFFFFEu) << 18) ^ b;
        b = ((z[1] << 2) ^ z[1]) >> 27;
        z[1] = ((z[1] & 0xFFFFFFF8u) << 2) ^ b;
        b = ((z[2] << 13) ^ z[2]) >> 21;
        z[2] = ((z[2] & 0xFFFFFFF0u) << 7) ^ b;
        b = ((z[3] << 3) ^ z[3]) >> 12;
        z[3] = ((z[3] & 0xFFFFFF80u) << 13) ^ b;
        return z[0] ^ z[1] ^ z[2] ^ z[3];
    }
};

// L'Ecuyer's three-component Tausworthe (taus88), period near 2^88.
struct Taus88 {
    static constexpr std::array<uint32_t, 3> kLaneBounds = {2, 8, 16};
    std::array<uint32_t, 3> z = {2, 8, 16};

    constexpr uint32_t next() {
        uint32_t b;
        b = ((z[0] << 13) ^ z[0]) >> 19;
        z[0] = ((z[0] & 0xFFFFFFFEu) << 12) ^ b;
        b = ((z[1] << 2) ^ z[1]) >> 25;
        z[1] = ((z[1] & 0xFFFFFFF8u) << 4) ^ b;
        b = ((z[2] << 3) ^ z[2]) >> 11;
        z[2] = ((z[2] & 0xFFFFFFF0u) << 17) ^ b;
        return z[0] ^ z[1] ^ z[2];
    }
};

// Vigna's xorshift128+ with the standard (23, 17, 26) triple. The native
// output is 64 bits; we emit its low half. State must not be all zero.
struct Xorshift128Plus {
    std::array<uint64_t, 2> s = {1, 2};

    constexpr uint32_t next() {
        uint64_t s1 = s[0];
        const uint64_t s0 = s[1];
        s[0] = s0;
        s1 ^= s1 << 23;
        s[1] = s1 ^ s0 ^ (s1 >> 17) ^ (s0 >> 26);
        return static_cast<uint32_t>(s[1] + s0);
    }
};

// Marsaglia's classic 128-bit xorshift, kept as a comparison variant.
// State must not be all zero.
struct Xorshift128 {
    std::array<uint32_t, 4> s = {123456789, 362436069, 521288629, 88675123};

    constexpr uint32_t next() {
        const uint32_t t = s[0] ^ (s[0] << 11);
        s[0] = s[1];
        s[1] = s[2];
        s[2] = s[3];
        s[3] = s[3] ^ (s[3] >> 19) ^ t ^ (t >> 8);
        return s[3];
    }
};

// Emits the same mask forever. Breaks the generator on purpose; the
// statistical battery should reject streams built on it.
struct ConstantStrategy {
    uint32_t value = 0;

    constexpr uint32_t next() const { return value; }
};

enum class StrategyKind {
    kLfsr113,
    kTaus88,
    kXorshift128Plus,
    kXorshift128,
    kConstant,
};

using StrategyState =
    std::variant<Lfsr113, Taus88, Xorshift128Plus, Xorshift128, ConstantStrategy>;

// Build a strategy from raw seed material. Material whose length exactly
// matches the state width is loaded into the lanes little-endian;
// anything else is folded with FNV-1a and expanded through SplitMix64.
// Lanes that violate the generator's constraints are fixed up
// deterministically. Throws std::invalid_argument on empty material.
StrategyState seed_strategy(StrategyKind kind, std::span<const uint8_t> material);

const char* strategy_name(StrategyKind kind);

// Lookup by CLI name ("lfsr113", "taus88", "xorshift128p", "xorshift128").
// Returns false if unknown.
bool find_strategy(std::string_view name, StrategyKind& out);

inline uint32_t next_strategy(StrategyState& st) {
    return std::visit([](auto& s) { return s.next(); }, st);
}

}  // namespace ciprng
