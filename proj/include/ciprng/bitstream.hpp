#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ciprng {

// A bit sequence backed by bytes. Bit 0 is the most significant bit of
// byte 0; 32-bit words are appended most significant byte first, so the
// bit order matches writing each word in binary and concatenating.
class BitStream {
  public:
    BitStream() = default;

    // n_bits defaults to all bits of the input; it may name a shorter
    // prefix but never more than the input holds.
    static BitStream from_words(std::span<const uint32_t> words, size_t n_bits = SIZE_MAX);
    static BitStream from_bytes(std::vector<uint8_t> bytes, size_t n_bits = SIZE_MAX);

    size_t bit_count() const { return n_bits_; }
    size_t byte_count() const { return n_bits_ / 8; }

    bool bit(size_t i) const { return (bytes_[i / 8] >> (7 - i % 8)) & 1; }

    // Ones among the first bit_count() bits.
    size_t count_ones() const;

    // Whole bytes only; a trailing partial byte is not included.
    std::span<const uint8_t> bytes() const { return {bytes_.data(), byte_count()}; }

  private:
    std::vector<uint8_t> bytes_;
    size_t n_bits_ = 0;
};

}  // namespace ciprng
