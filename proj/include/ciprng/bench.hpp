#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ciprng/generator.hpp"

namespace ciprng {

struct BenchStage {
    std::string name;
    uint64_t words = 0;
    double seconds = 0.0;
    double words_per_sec = 0.0;
    uint32_t checksum = 0;  // xor of all outputs, so the loops cannot be elided
};

// Three timed stages over the same word count: the strategy alone, the
// strategy plus the masked update, and the full pipeline including the
// output permutation. Each stage is reseeded from the config so the work
// is identical across runs.
std::vector<BenchStage> run_bench(const GeneratorConfig& cfg, uint64_t n_words,
                                  uint64_t warmup_words = 1u << 20);

std::string render_bench(const std::vector<BenchStage>& stages);

}  // namespace ciprng
