#include <doctest.h>

#include <array>
#include <set>

#include "ciprng/boolean_func.hpp"
#include "ciprng/chaotic.hpp"
#include "ciprng/iteration_graph.hpp"

using namespace ciprng;

TEST_CASE("neg table is 255 - x everywhere") {
    const auto& f = neg_func();
    for (int x = 0; x < 256; ++x) {
        CHECK(f(static_cast<uint8_t>(x)) == 255 - x);
    }
}

TEST_CASE("f1 table spot values") {
    const auto& f = f1_func();
    CHECK(f(0) == 223);
    CHECK(f(1) == 190);
    CHECK(f(2) == 249);
    CHECK(f(3) == 236);
    CHECK(f(4) == 243);
    CHECK(f(5) == 234);
    CHECK(f(255) == 128);
}

TEST_CASE("f1 table checksum matches embedded reference") {
    CHECK(table_checksum(f1_func().table) == kF1Checksum);
}

TEST_CASE("all shipped tables are bijective") {
    CHECK(is_bijective(neg_func().table));
    CHECK(is_bijective(f1_func().table));
    CHECK(is_bijective(identity_func().table));
    ByteTable broken = neg_func().table;
    broken[7] = broken[8];
    CHECK_FALSE(is_bijective(broken));
}

TEST_CASE("find_function resolves the CLI names") {
    CHECK(find_function("neg") == &neg_func());
    CHECK(find_function("f1") == &f1_func());
    CHECK(find_function("identity") == &identity_func());
    CHECK(find_function("bogus") == nullptr);
}

TEST_CASE("iteration graph edges match direct enumeration") {
    // Independent oracle: collect successor sets straight from the
    // masked-update definition and compare against the adjacency matrix.
    const auto& f = f1_func();
    const IterationGraph g = build_iteration_graph(f);
    size_t edges = 0;
    for (int x = 0; x < 256; ++x) {
        std::set<uint8_t> succ;
        for (int s = 1; s < 256; ++s) {
            const uint8_t fx = f(static_cast<uint8_t>(x));
            succ.insert(static_cast<uint8_t>((fx & s) | (x & ~s)));
        }
        edges += succ.size();
        for (int y = 0; y < 256; ++y) {
            CHECK(g.has_edge(static_cast<uint8_t>(x), static_cast<uint8_t>(y)) ==
                  (succ.count(static_cast<uint8_t>(y)) > 0));
        }
    }
    CHECK(g.edge_count == edges);
}

TEST_CASE("iteration graph edge counts") {
    CHECK(build_iteration_graph(neg_func()).edge_count == 65280);
    CHECK(build_iteration_graph(f1_func()).edge_count == 32768);
    // Identity: only self-loops, one per vertex.
    CHECK(build_iteration_graph(identity_func()).edge_count == 256);
}

TEST_CASE("strong connectivity verdicts") {
    CHECK(is_strongly_connected(build_iteration_graph(neg_func())));
    CHECK(is_strongly_connected(build_iteration_graph(f1_func())));
    CHECK_FALSE(is_strongly_connected(build_iteration_graph(identity_func())));
}

TEST_CASE("full mask always yields an edge to f(x)") {
    const auto& f = f1_func();
    const IterationGraph g = build_iteration_graph(f);
    for (int x = 0; x < 256; ++x) {
        CHECK(g.has_edge(static_cast<uint8_t>(x), f(static_cast<uint8_t>(x))));
    }
}
