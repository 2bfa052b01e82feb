#include "ciprng/boolean_func.hpp"

#include <array>

#include "ciprng/mix.hpp"

namespace ciprng {

namespace {

constexpr ByteTable make_neg_table() {
    ByteTable t{};
    for (int x = 0; x < 256; ++x) {
        t[x] = static_cast<uint8_t>(255 - x);
    }
    return t;
}

constexpr ByteTable make_identity_table() {
    ByteTable t{};
    for (int x = 0; x < 256; ++x) {
        t[x] = static_cast<uint8_t>(x);
    }
    return t;
}

// clang-format off
constexpr ByteTable kF1Table = {
    223, 190, 249, 236, 243, 234, 241, 252, 183, 244, 229, 245, 179, 178, 225, 248,
    237, 254, 173, 232, 171, 202, 201, 200, 247, 198, 228, 230, 195, 242, 233, 160,
    215, 220, 205, 216, 218, 154, 221, 208, 213, 210, 212, 148, 147, 211, 217, 209,
    239, 238, 141, 140, 235, 203, 193, 204, 135, 134, 199, 197, 131, 226, 129, 224,
     63, 174, 253, 184, 251, 250, 189, 176, 191, 246, 180, 182,  51,  50, 185, 240,
     47,  46, 175, 188, 139,  42, 161, 172, 231, 164, 181, 165, 227, 130,  33,  32,
     31, 222, 153, 158, 219,  26,  25, 156, 159, 214, 151, 149, 146,  18, 144, 152,
    207, 206, 157, 136, 138, 170, 169,   8, 133,   6,   5, 196,   3, 194, 137, 192,
    255, 110, 109, 120, 107, 126, 125, 112, 103, 114, 116, 118, 123,  98, 121,  96,
     79,  78, 111, 124,  75, 122,  97, 108,  71, 100, 117, 101, 115,  66, 113,  64,
    127,  90,  89,  94,  83,  91,  81,  92,  95,  84,  87,  85,  82,  86,  80,  88,
     77,  76,  93,  72,  74, 106, 105, 104,  69, 102,  68,  70,  99,  67,  73,  65,
     55,  58,  57,  44, 187, 186,  49,  60, 119,  52,  37,  53,  35,  54, 177,  56,
     45,  62,  61,  40,  59,  10,   9, 168, 167, 166,  36,  38, 163, 162,  41,  48,
     23,  28,  13,  24, 155,  30,  29,  16,  21, 150,  20,  22,  27,  19, 145,  17,
    143, 142,  15,  14,  43,  11,   1,  12,  39,   4,   7, 132,   2,  34,   0, 128,
};
// clang-format on

}  // namespace

const BooleanFunc& neg_func() {
    static const BooleanFunc f{"neg", make_neg_table()};
    return f;
}

const BooleanFunc& f1_func() {
    static const BooleanFunc f{"f1", kF1Table};
    return f;
}

const BooleanFunc& identity_func() {
    static const BooleanFunc f{"identity", make_identity_table()};
    return f;
}

const BooleanFunc* find_function(std::string_view name) {
    if (name == "neg") return &neg_func();
    if (name == "f1") return &f1_func();
    if (name == "identity") return &identity_func();
    return nullptr;
}

bool is_bijective(const ByteTable& table) {
    std::array<bool, 256> seen{};
    for (uint8_t v : table) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

uint64_t table_checksum(const ByteTable& table) {
    return fnv1a64({table.data(), table.size()});
}

}  // namespace ciprng
