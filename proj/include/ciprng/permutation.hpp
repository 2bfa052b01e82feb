#pragma once

#include <cstdint>
#include <stdexcept>

namespace ciprng {

// Output permutation over 32-bit words:
//
//   shift = (in >> 28) + 4                 data-dependent, in [4, 19]
//   w1    = (in >> shift) ^ in
//   w2    = w1 * b                         b odd, mod 2^32
//   w3    = (w2 >> 22) ^ w2
//
// Every stage is invertible: the multiply because b is odd, the xorshifts
// because right-xorshift by k is a bijection, and the variable shift
// because shift >= 4 leaves the top four bits of w1 equal to those of in,
// which is exactly the nibble that selected the shift.
class PermParams {
  public:
    static constexpr unsigned kTopSelectShift = 28;
    static constexpr unsigned kTopShiftBase = 4;
    static constexpr unsigned kFinalShift = 22;

    explicit constexpr PermParams(uint32_t b) : b_(b) {
        if ((b & 1u) == 0) {
            throw std::invalid_argument("permutation multiplier must be odd");
        }
    }

    constexpr uint32_t b() const { return b_; }

  private:
    uint32_t b_;
};

// Inverse of y = (x >> k) ^ x: the preimage is the xor of all shifted
// copies y >> jk, since applying the forward map telescopes the sum.
constexpr uint32_t invert_xorshift_right(uint32_t y, unsigned k) {
    uint32_t x = y;
    for (unsigned s = k; s < 32; s += k) {
        x ^= y >> s;
    }
    return x;
}

// Multiplicative inverse of an odd 32-bit constant, via Newton iteration
// (five steps double the valid bits from 5 to 32+).
constexpr uint32_t odd_inverse_u32(uint32_t b) {
    uint32_t x = b;  // correct to 5 bits for odd b
    for (int i = 0; i < 4; ++i) {
        x *= 2u - b * x;
    }
    return x;
}

constexpr uint32_t permute(uint32_t in, const PermParams& p) {
    const unsigned shift = (in >> PermParams::kTopSelectShift) + PermParams::kTopShiftBase;
    const uint32_t w1 = (in >> shift) ^ in;
    const uint32_t w2 = w1 * p.b();
    return (w2 >> PermParams::kFinalShift) ^ w2;
}

constexpr uint32_t unpermute(uint32_t out, const PermParams& p) {
    const uint32_t w2 = invert_xorshift_right(out, PermParams::kFinalShift);
    const uint32_t w1 = w2 * odd_inverse_u32(p.b());
    // The shift amount was chosen by the top nibble of the input, which
    // stage 1 preserved.
    const unsigned shift = (w1 >> PermParams::kTopSelectShift) + PermParams::kTopShiftBase;
    uint32_t in = w1;
    for (int i = 0; i < 8; ++i) {
        in = w1 ^ (in >> shift);
    }
    return in;
}

}  // namespace ciprng
