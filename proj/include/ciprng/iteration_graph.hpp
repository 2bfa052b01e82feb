#pragma once

#include <array>
#include <bitset>
#include <cstdint>

#include "ciprng/boolean_func.hpp"

namespace ciprng {

// Reachability graph of the masked update on one block: vertices are the
// 256 byte values, with an edge x -> y whenever some non-empty mask s
// gives y = (f(x) & s) | (x & ~s). Strong connectivity of this graph is
// the precondition an iterate function must satisfy before it is allowed
// to drive the generator.
struct IterationGraph {
    std::array<std::bitset<256>, 256> adj;
    size_t edge_count = 0;

    bool has_edge(uint8_t from, uint8_t to) const { return adj[from][to]; }
};

IterationGraph build_iteration_graph(const BooleanFunc& f);

bool is_strongly_connected(const IterationGraph& g);

}  // namespace ciprng
