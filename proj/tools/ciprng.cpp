#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ciprng/bench.hpp"
#include "ciprng/boolean_func.hpp"
#include "ciprng/generator.hpp"
#include "ciprng/iteration_graph.hpp"
#include "ciprng/mix.hpp"
#include "ciprng/stat_tests.hpp"
#include "ciprng/stream_io.hpp"

namespace {

using namespace ciprng;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;    // a verification or statistical test failed
constexpr int kExitUsage = 2;   // bad flags or bad input

constexpr const char* kDefaultSeedHex = "deadbeefcafef00d";

struct Opts {
    std::string function = "neg";
    std::string strategy = "xorshift128p";
    std::string seed_hex = kDefaultSeedHex;
    std::optional<uint32_t> b;
    uint64_t count = 16;
    uint64_t bench_count = 100000000;
    uint64_t golden_count = 64;
    uint64_t bits = 10000000;
    std::string out = "-";
    std::string format = "raw";
    bool machine = false;
};

const BooleanFunc& resolve_function(const std::string& name, bool allow_identity) {
    const BooleanFunc* f = find_function(name);
    if (f == nullptr || (!allow_identity && f == &identity_func())) {
        throw std::invalid_argument("unknown function: " + name);
    }
    return *f;
}

std::vector<uint8_t> resolve_seed(const std::string& hex) {
    auto bytes = parse_hex_bytes(hex);
    if (!bytes || bytes->empty()) {
        throw std::invalid_argument("seed must be a non-empty even-length hex string");
    }
    return std::move(*bytes);
}

GeneratorConfig make_config(const Opts& o) {
    const BooleanFunc& f = resolve_function(o.function, /*allow_identity=*/false);
    StrategyKind kind;
    if (!find_strategy(o.strategy, kind)) {
        throw std::invalid_argument("unknown strategy: " + o.strategy);
    }
    const auto seed = resolve_seed(o.seed_hex);
    return GeneratorConfig{
        .func = &f,
        .strategy = kind,
        .strategy_seed = seed,
        .x0 = x0_from_seed(seed),
        .perm = PermParams{o.b.value_or(default_b_for(f))},
    };
}

// "-" means stdout. Files are opened in binary mode: the raw format
// depends on it, and the text formats only ever emit '\n'.
std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) {
        throw std::invalid_argument("cannot open output file: " + path);
    }
    return file;
}

int cmd_gen(const Opts& o) {
    const GeneratorConfig cfg = make_config(o);
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);

    Generator gen(cfg);
    std::vector<uint32_t> buf(64 * 1024);
    uint64_t left = o.count;
    while (left > 0) {
        const size_t n = static_cast<size_t>(std::min<uint64_t>(left, buf.size()));
        gen.fill({buf.data(), n});
        if (o.format == "hex") {
            write_words_hex(os, {buf.data(), n});
        } else {
            write_words_le(os, {buf.data(), n});
        }
        left -= n;
    }
    os.flush();
    return os ? kExitOk : kExitFail;
}

int cmd_verify(const Opts& o) {
    const BooleanFunc& f = resolve_function(o.function, /*allow_identity=*/true);
    const PermParams perm{o.b.value_or(default_b_for(f))};
    bool ok = true;
    const auto check = [&ok](const char* label, bool good, const std::string& detail = "") {
        std::printf("%-22s %s%s%s\n", label, good ? "ok" : "FAIL", detail.empty() ? "" : " ",
                    detail.c_str());
        ok = ok && good;
    };

    // The embedded tables are checked regardless of which function the
    // generator will use.
    {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "(0x%016llx)",
                      static_cast<unsigned long long>(table_checksum(f1_func().table)));
        check("f1 table checksum", table_checksum(f1_func().table) == kF1Checksum, buf);
        check("f1 table bijective", is_bijective(f1_func().table));
        bool neg_ok = true;
        for (int x = 0; x < 256; ++x) neg_ok = neg_ok && neg_func().table[x] == 255 - x;
        check("neg table is 255-x", neg_ok);
    }

    std::printf("function               %s\n", std::string(f.name).c_str());
    check("table bijective", is_bijective(f.table));

    const IterationGraph g = build_iteration_graph(f);
    std::printf("graph edges            %zu\n", g.edge_count);
    check("strongly connected", is_strongly_connected(g));

    std::printf("permutation b          %u\n", perm.b());
    bool rt_ok = true;
    SplitMix64 sm{perm.b()};
    for (int i = 0; i < 100000 && rt_ok; ++i) {
        const uint32_t w = static_cast<uint32_t>(sm.next());
        rt_ok = unpermute(permute(w, perm), perm) == w;
    }
    for (uint32_t w : {0u, 1u, 0x80000000u, 0xFFFFFFFFu}) {
        rt_ok = rt_ok && unpermute(permute(w, perm), perm) == w;
    }
    check("permutation roundtrip", rt_ok, "(100000 samples + 4 boundary words)");

    std::printf("result                 %s\n", ok ? "PASS" : "FAIL");
    return ok ? kExitOk : kExitFail;
}

int cmd_test(const Opts& o) {
    const GeneratorConfig cfg = make_config(o);
    const auto reports = run_battery(cfg, o.bits);
    std::fputs((o.machine ? render_machine(reports) : render_table(reports)).c_str(), stdout);
    // Exit status tracks the (lenient) NIST threshold; the TestU01 band
    // is reported per test but only advisory here.
    for (const auto& r : reports) {
        if (!r.pass_nist()) return kExitFail;
    }
    return kExitOk;
}

int cmd_bench(const Opts& o) {
    const GeneratorConfig cfg = make_config(o);
    const auto stages = run_bench(cfg, o.bench_count);
    std::fputs(render_bench(stages).c_str(), stdout);
    return kExitOk;
}

int cmd_export_f1(const Opts& o) {
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);
    char buf[8];
    for (int x = 0; x < 256; ++x) {
        std::snprintf(buf, sizeof(buf), "%02x\n", f1_func().table[x]);
        os << buf;
    }
    os.flush();
    return os ? kExitOk : kExitFail;
}

int cmd_golden(const Opts& o) {
    const BooleanFunc& f = resolve_function(o.function, /*allow_identity=*/false);
    const GeneratorConfig cfg = (&f == &f1_func()) ? golden_config_f1() : golden_config_neg();
    std::ofstream file;
    std::ostream& os = open_out(o.out, file);

    Generator gen(cfg);
    std::vector<uint32_t> words(o.golden_count);
    gen.fill(words);
    write_words_hex(os, words);
    os.flush();
    return os ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chaotic-iteration PRNG: generate, verify, and measure"};
    app.require_subcommand(1);

    Opts o;
    const auto function_names = CLI::IsMember({"neg", "f1"});
    const auto strategy_names = CLI::IsMember({"lfsr113", "taus88", "xorshift128p", "xorshift128"});

    auto* gen = app.add_subcommand("gen", "emit words for external consumption");
    gen->add_option("--function", o.function, "iterate function")->check(function_names);
    gen->add_option("--strategy", o.strategy, "mask-word source")->check(strategy_names);
    gen->add_option("--seed", o.seed_hex, "seed material, hex bytes")->envname("CIPRNG_SEED");
    gen->add_option("--b", o.b, "output-permutation multiplier, odd");
    gen->add_option("--count", o.count, "words to emit")->capture_default_str();
    gen->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();
    gen->add_option("--format", o.format, "raw (little-endian bytes) or hex (one word per line)")
        ->check(CLI::IsMember({"raw", "hex"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "check generator preconditions");
    verify->add_option("--function", o.function, "iterate function, identity allowed as control")
        ->check(CLI::IsMember({"neg", "f1", "identity"}));
    verify->add_option("--b", o.b, "output-permutation multiplier, odd");

    auto* test = app.add_subcommand("test", "run the statistical battery on generated output");
    test->add_option("--function", o.function, "iterate function")->check(function_names);
    test->add_option("--strategy", o.strategy, "mask-word source")->check(strategy_names);
    test->add_option("--seed", o.seed_hex, "seed material, hex bytes")->envname("CIPRNG_SEED");
    test->add_option("--b", o.b, "output-permutation multiplier, odd");
    test->add_option("--bits", o.bits, "stream length in bits, at least 10^6")
        ->capture_default_str();
    test->add_flag("--machine", o.machine, "tab-separated output");

    auto* bench = app.add_subcommand("bench", "time the pipeline stage by stage");
    bench->add_option("--function", o.function, "iterate function")->check(function_names);
    bench->add_option("--strategy", o.strategy, "mask-word source")->check(strategy_names);
    bench->add_option("--seed", o.seed_hex, "seed material, hex bytes")->envname("CIPRNG_SEED");
    bench->add_option("--b", o.b, "output-permutation multiplier, odd");
    bench->add_option("--count", o.bench_count, "words per stage")->capture_default_str();

    auto* exportf1 = app.add_subcommand("export-f1", "dump the f1 table, one hex byte per line");
    exportf1->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();

    auto* golden = app.add_subcommand("golden", "emit the reference vector for a function");
    golden->add_option("--function", o.function, "iterate function")->check(function_names);
    golden->add_option("--count", o.golden_count, "words to emit")->capture_default_str();
    golden->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (verify->parsed()) return cmd_verify(o);
        if (test->parsed()) return cmd_test(o);
        if (bench->parsed()) return cmd_bench(o);
        if (exportf1->parsed()) return cmd_export_f1(o);
        if (golden->parsed()) return cmd_golden(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
