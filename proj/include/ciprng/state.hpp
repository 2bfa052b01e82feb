#pragma once

#include <cstdint>

namespace ciprng {

// The generator state is a 32-bit word made of four independent 8-bit
// blocks. Block A sits in the most significant byte, block D in the least.
struct State32 {
    uint8_t a = 0;
    uint8_t b = 0;
    uint8_t c = 0;
    uint8_t d = 0;

    static constexpr State32 unpack(uint32_t w) {
        return State32{
            static_cast<uint8_t>(w >> 24),
            static_cast<uint8_t>(w >> 16),
            static_cast<uint8_t>(w >> 8),
            static_cast<uint8_t>(w),
        };
    }

    constexpr uint32_t pack() const {
        return (static_cast<uint32_t>(a) << 24) | (static_cast<uint32_t>(b) << 16) |
               (static_cast<uint32_t>(c) << 8) | static_cast<uint32_t>(d);
    }

    constexpr bool operator==(const State32&) const = default;
};

}  // namespace ciprng
