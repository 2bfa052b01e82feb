#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ciprng {

// Raw output format: each 32-bit word as four little-endian bytes.
void write_words_le(std::ostream& os, std::span<const uint32_t> words);

// Text output format: one word per line, eight lowercase hex digits.
void write_words_hex(std::ostream& os, std::span<const uint32_t> words);

// Parse the text format back. Blank lines are ignored; anything else
// that is not exactly one hex word per line is an error.
std::optional<std::vector<uint32_t>> read_hex_words(std::istream& is);

// "deadbeef" -> {0xde, 0xad, 0xbe, 0xef}. Even digit count required; an
// optional 0x prefix is accepted. Returns nullopt on malformed input.
std::optional<std::vector<uint8_t>> parse_hex_bytes(std::string_view text);

}  // namespace ciprng
