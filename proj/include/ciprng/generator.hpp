#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciprng/boolean_func.hpp"
#include "ciprng/chaotic.hpp"
#include "ciprng/permutation.hpp"
#include "ciprng/strategy.hpp"

namespace ciprng {

struct GeneratorConfig {
    const BooleanFunc* func = &neg_func();
    StrategyKind strategy = StrategyKind::kXorshift128Plus;
    std::vector<uint8_t> strategy_seed;
    uint32_t x0 = 0;
    PermParams perm{95};
};

// Default output-permutation multiplier for each iterate function.
uint32_t default_b_for(const BooleanFunc& f);

// Initial state drawn from seed material: little-endian load of the first
// four bytes, zero-extended when the material is shorter.
uint32_t x0_from_seed(std::span<const uint8_t> material);

// Full pipeline: every call advances the masked-update state by one step
// under a fresh strategy word, then emits the permuted state. The
// permuted word is output only; it never feeds back into the state.
class Generator {
  public:
    explicit Generator(const GeneratorConfig& cfg);

    uint32_t next();
    void fill(std::span<uint32_t> out);

    uint32_t state() const { return x_; }

  private:
    StrategyState strategy_;
    const BooleanFunc* func_;
    PermParams perm_;
    uint32_t x_;
};

// Reference seed material used by the golden subcommand and the committed
// fixtures: the eight bytes de ad be ef ca fe f0 0d.
std::span<const uint8_t> golden_seed();

GeneratorConfig golden_config_neg();
GeneratorConfig golden_config_f1();

}  // namespace ciprng
