#pragma once

#include <cstdint>

#include "ciprng/boolean_func.hpp"

namespace ciprng {

// One masked update of a single 8-bit block. Mask bits select, per
// component, whether the new value comes from f(x) or is kept from x:
//
//   x' = (f(x) & s) | (x & ~s)
//
// An all-zero mask is legal and leaves the block unchanged.
constexpr uint8_t ci_step_block(uint8_t x, uint8_t s, const BooleanFunc& f) {
    return static_cast<uint8_t>((f(x) & s) | (x & static_cast<uint8_t>(~s)));
}

// One update of the full 32-bit state: the four blocks advance in
// parallel, each under its own byte of the mask word.
constexpr uint32_t ci_step(uint32_t x, uint32_t s, const BooleanFunc& f) {
    const uint32_t fx = (static_cast<uint32_t>(f(static_cast<uint8_t>(x >> 24))) << 24) |
                        (static_cast<uint32_t>(f(static_cast<uint8_t>(x >> 16))) << 16) |
                        (static_cast<uint32_t>(f(static_cast<uint8_t>(x >> 8))) << 8) |
                        static_cast<uint32_t>(f(static_cast<uint8_t>(x)));
    return (fx & s) | (x & ~s);
}

}  // namespace ciprng
