#include "ciprng/stream_io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace ciprng {

void write_words_le(std::ostream& os, std::span<const uint32_t> words) {
    for (uint32_t w : words) {
        const char buf[4] = {
            static_cast<char>(w & 0xFF),
            static_cast<char>((w >> 8) & 0xFF),
            static_cast<char>((w >> 16) & 0xFF),
            static_cast<char>((w >> 24) & 0xFF),
        };
        os.write(buf, 4);
    }
}

void write_words_hex(std::ostream& os, std::span<const uint32_t> words) {
    char buf[16];
    for (uint32_t w : words) {
        std::snprintf(buf, sizeof(buf), "%08x\n", w);
        os << buf;
    }
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::optional<std::vector<uint32_t>> read_hex_words(std::istream& is) {
    std::vector<uint32_t> words;
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.size() != 8) return std::nullopt;
        uint32_t w = 0;
        for (char c : line) {
            const int d = hex_digit(c);
            if (d < 0) return std::nullopt;
            w = (w << 4) | static_cast<uint32_t>(d);
        }
        words.push_back(w);
    }
    return words;
}

std::optional<std::vector<uint8_t>> parse_hex_bytes(std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
    }
    if (text.empty() || text.size() % 2 != 0) return std::nullopt;
    std::vector<uint8_t> bytes;
    bytes.reserve(text.size() / 2);
    for (size_t i = 0; i < text.size(); i += 2) {
        const int hi = hex_digit(text[i]);
        const int lo = hex_digit(text[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        bytes.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return bytes;
}

}  // namespace ciprng
