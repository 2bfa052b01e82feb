#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ciprng {

using ByteTable = std::array<uint8_t, 256>;

// An iterate function on bytes, given by its full lookup table.
struct BooleanFunc {
    std::string_view name;
    ByteTable table;

    constexpr uint8_t operator()(uint8_t x) const { return table[x]; }
};

// Bitwise negation: table[x] = 255 - x.
const BooleanFunc& neg_func();

// A fixed bijection on bytes built so that the masked-update graph below
// (see chaotic.hpp) stays strongly connected. Unlike negation it has no
// simple closed form; the table is embedded verbatim.
const BooleanFunc& f1_func();

// table[x] = x. Useful as a negative control: its masked-update graph is
// not strongly connected.
const BooleanFunc& identity_func();

// Lookup by CLI name ("neg", "f1", "identity"). Returns nullptr if unknown.
const BooleanFunc* find_function(std::string_view name);

bool is_bijective(const ByteTable& table);

// FNV-1a fingerprint of the table bytes, for change detection.
uint64_t table_checksum(const ByteTable& table);

// Expected fingerprint of the embedded f1 table.
inline constexpr uint64_t kF1Checksum = 0x645B15B720D42D5Dull;

}  // namespace ciprng
