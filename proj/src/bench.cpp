#include "ciprng/bench.hpp"

#include <chrono>
#include <cstdio>
#include <variant>

#include "ciprng/chaotic.hpp"

namespace ciprng {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Body>
BenchStage time_stage(const char* name, uint64_t n_words, uint64_t warmup_words, Body body) {
    uint32_t sink = 0;
    body(warmup_words, sink);
    const auto t0 = Clock::now();
    body(n_words, sink);
    const auto t1 = Clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    return BenchStage{name, n_words, secs, secs > 0 ? static_cast<double>(n_words) / secs : 0.0,
                      sink};
}

}  // namespace

std::vector<BenchStage> run_bench(const GeneratorConfig& cfg, uint64_t n_words,
                                  uint64_t warmup_words) {
    std::vector<BenchStage> out;
    const BooleanFunc& f = *cfg.func;

    {
        StrategyState st = seed_strategy(cfg.strategy, cfg.strategy_seed);
        out.push_back(time_stage("strategy", n_words, warmup_words, [&](uint64_t n, uint32_t& sink) {
            std::visit(
                [&](auto& s) {
                    for (uint64_t i = 0; i < n; ++i) sink ^= s.next();
                },
                st);
        }));
    }
    {
        StrategyState st = seed_strategy(cfg.strategy, cfg.strategy_seed);
        uint32_t x = cfg.x0;
        out.push_back(
            time_stage("strategy+update", n_words, warmup_words, [&](uint64_t n, uint32_t& sink) {
                std::visit(
                    [&](auto& s) {
                        for (uint64_t i = 0; i < n; ++i) {
                            x = ci_step(x, s.next(), f);
                            sink ^= x;
                        }
                    },
                    st);
            }));
    }
    {
        StrategyState st = seed_strategy(cfg.strategy, cfg.strategy_seed);
        uint32_t x = cfg.x0;
        out.push_back(
            time_stage("full-pipeline", n_words, warmup_words, [&](uint64_t n, uint32_t& sink) {
                std::visit(
                    [&](auto& s) {
                        for (uint64_t i = 0; i < n; ++i) {
                            x = ci_step(x, s.next(), f);
                            sink ^= permute(x, cfg.perm);
                        }
                    },
                    st);
            }));
    }
    return out;
}

std::string render_bench(const std::vector<BenchStage>& stages) {
    char line[160];
    std::string out;
    std::snprintf(line, sizeof(line), "%-16s %12s %10s %14s %12s %10s\n", "stage", "words",
                  "seconds", "words/s", "MB/s", "checksum");
    out += line;
    for (const auto& s : stages) {
        std::snprintf(line, sizeof(line), "%-16s %12llu %10.4f %14.0f %12.1f   %08x\n",
                      s.name.c_str(), static_cast<unsigned long long>(s.words), s.seconds,
                      s.words_per_sec, s.words_per_sec * 4.0 / 1e6, s.checksum);
        out += line;
    }
    return out;
}

}  // namespace ciprng
