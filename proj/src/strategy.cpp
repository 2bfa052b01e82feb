#include "ciprng/strategy.hpp"

#include <cstring>
#include <stdexcept>

#include "ciprng/mix.hpp"

namespace ciprng {

namespace {

uint32_t load_le32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint64_t load_le64(const uint8_t* p) {
    return static_cast<uint64_t>(load_le32(p)) | (static_cast<uint64_t>(load_le32(p + 4)) << 32);
}

// Fill lanes either directly from material of exactly the right width, or
// from a SplitMix64 stream keyed by the FNV fold of the material.
template <typename Lane, size_t N>
void fill_lanes(std::array<Lane, N>& lanes, std::span<const uint8_t> material) {
    constexpr size_t kWidth = sizeof(Lane) * N;
    if (material.size() == kWidth) {
        for (size_t i = 0; i < N; ++i) {
            if constexpr (sizeof(Lane) == 4) {
                lanes[i] = load_le32(material.data() + 4 * i);
            } else {
                lanes[i] = load_le64(material.data() + 8 * i);
            }
        }
        return;
    }
    SplitMix64 sm{fnv1a64(material)};
    for (auto& lane : lanes) {
        lane = static_cast<Lane>(sm.next());
    }
}

}  // namespace

StrategyState seed_strategy(StrategyKind kind, std::span<const uint8_t> material) {
    if (material.empty()) {
        throw std::invalid_argument("strategy seed material must not be empty");
    }
    switch (kind) {
        case StrategyKind::kLfsr113: {
            Lfsr113 st;
            fill_lanes(st.z, material);
            for (size_t i = 0; i < st.z.size(); ++i) {
                if (st.z[i] < Lfsr113::kLaneBounds[i]) st.z[i] |= Lfsr113::kLaneBounds[i];
            }
            return st;
        }
        case StrategyKind::kTaus88: {
            Taus88 st;
            fill_lanes(st.z, material);
            for (size_t i = 0; i < st.z.size(); ++i) {
                if (st.z[i] < Taus88::kLaneBounds[i]) st.z[i] |= Taus88::kLaneBounds[i];
            }
            return st;
        }
        case StrategyKind::kXorshift128Plus: {
            Xorshift128Plus st;
            fill_lanes(st.s, material);
            if ((st.s[0] | st.s[1]) == 0) st.s[0] = 0x9e3779b97f4a7c15ull;
            return st;
        }
        case StrategyKind::kXorshift128: {
            Xorshift128 st;
            fill_lanes(st.s, material);
            if ((st.s[0] | st.s[1] | st.s[2] | st.s[3]) == 0) st.s[0] = 0x9e3779b9u;
            return st;
        }
        case StrategyKind::kConstant: {
            // Constant value from the first four bytes, zero-extended.
            uint8_t buf[4] = {0, 0, 0, 0};
            std::memcpy(buf, material.data(), material.size() < 4 ? material.size() : 4);
            return ConstantStrategy{load_le32(buf)};
        }
    }
    throw std::invalid_argument("unknown strategy kind");
}

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::kLfsr113: return "lfsr113";
        case StrategyKind::kTaus88: return "taus88";
        case StrategyKind::kXorshift128Plus: return "xorshift128p";
        case StrategyKind::kXorshift128: return "xorshift128";
        case StrategyKind::kConstant: return "constant";
    }
    return "?";
}

bool find_strategy(std::string_view name, StrategyKind& out) {
    if (name == "lfsr113") out = StrategyKind::kLfsr113;
    else if (name == "taus88") out = StrategyKind::kTaus88;
    else if (name == "xorshift128p") out = StrategyKind::kXorshift128Plus;
    else if (name == "xorshift128") out = StrategyKind::kXorshift128;
    else return false;
    return true;
}

}  // namespace ciprng
