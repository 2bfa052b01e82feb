#include "ciprng/bitstream.hpp"

#include <stdexcept>

namespace ciprng {

BitStream BitStream::from_words(std::span<const uint32_t> words, size_t n_bits) {
    std::vector<uint8_t> bytes;
    bytes.reserve(words.size() * 4);
    for (uint32_t w : words) {
        bytes.push_back(static_cast<uint8_t>(w >> 24));
        bytes.push_back(static_cast<uint8_t>(w >> 16));
        bytes.push_back(static_cast<uint8_t>(w >> 8));
        bytes.push_back(static_cast<uint8_t>(w));
    }
    return from_bytes(std::move(bytes), n_bits);
}

BitStream BitStream::from_bytes(std::vector<uint8_t> bytes, size_t n_bits) {
    const size_t available = bytes.size() * 8;
    if (n_bits == SIZE_MAX) n_bits = available;
    if (n_bits > available) {
        throw std::invalid_argument("bit count exceeds input length");
    }
    BitStream s;
    s.bytes_ = std::move(bytes);
    s.n_bits_ = n_bits;
    return s;
}

size_t BitStream::count_ones() const {
    size_t ones = 0;
    const size_t whole = byte_count();
    for (size_t i = 0; i < whole; ++i) {
        ones += std::popcount(static_cast<unsigned>(bytes_[i]));
    }
    for (size_t i = whole * 8; i < n_bits_; ++i) {
        ones += bit(i);
    }
    return ones;
}

}  // namespace ciprng
