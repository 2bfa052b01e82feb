#include "ciprng/generator.hpp"

#include <array>
#include <stdexcept>
#include <variant>

namespace ciprng {

uint32_t default_b_for(const BooleanFunc& f) {
    return f.name == "f1" ? 811u : 95u;
}

uint32_t x0_from_seed(std::span<const uint8_t> material) {
    uint32_t x = 0;
    const size_t n = material.size() < 4 ? material.size() : 4;
    for (size_t i = 0; i < n; ++i) {
        x |= static_cast<uint32_t>(material[i]) << (8 * i);
    }
    return x;
}

Generator::Generator(const GeneratorConfig& cfg)
    : strategy_(seed_strategy(cfg.strategy, cfg.strategy_seed)),
      func_(cfg.func),
      perm_(cfg.perm),
      x_(cfg.x0) {
    if (func_ == nullptr) {
        throw std::invalid_argument("generator needs an iterate function");
    }
}

uint32_t Generator::next() {
    x_ = ci_step(x_, next_strategy(strategy_), *func_);
    return permute(x_, perm_);
}

void Generator::fill(std::span<uint32_t> out) {
    // Hoist the variant dispatch out of the word loop.
    std::visit(
        [&](auto& strat) {
            uint32_t x = x_;
            for (uint32_t& w : out) {
                x = ci_step(x, strat.next(), *func_);
                w = permute(x, perm_);
            }
            x_ = x;
        },
        strategy_);
}

std::span<const uint8_t> golden_seed() {
    static constexpr std::array<uint8_t, 8> kSeed = {0xde, 0xad, 0xbe, 0xef,
                                                     0xca, 0xfe, 0xf0, 0x0d};
    return kSeed;
}

GeneratorConfig golden_config_neg() {
    const auto seed = golden_seed();
    return GeneratorConfig{
        .func = &neg_func(),
        .strategy = StrategyKind::kXorshift128Plus,
        .strategy_seed = {seed.begin(), seed.end()},
        .x0 = x0_from_seed(seed),
        .perm = PermParams{95},
    };
}

GeneratorConfig golden_config_f1() {
    const auto seed = golden_seed();
    return GeneratorConfig{
        .func = &f1_func(),
        .strategy = StrategyKind::kLfsr113,
        .strategy_seed = {seed.begin(), seed.end()},
        .x0 = x0_from_seed(seed),
        .perm = PermParams{811},
    };
}

}  // namespace ciprng
