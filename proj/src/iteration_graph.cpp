#include "ciprng/iteration_graph.hpp"

#include "ciprng/chaotic.hpp"

namespace ciprng {

IterationGraph build_iteration_graph(const BooleanFunc& f) {
    IterationGraph g;
    for (int x = 0; x < 256; ++x) {
        for (int s = 1; s < 256; ++s) {  // the empty mask contributes no edge
            const uint8_t y = ci_step_block(static_cast<uint8_t>(x), static_cast<uint8_t>(s), f);
            g.adj[x][y] = true;
        }
        g.edge_count += g.adj[x].count();
    }
    return g;
}

namespace {

// BFS over an adjacency-matrix graph; returns true if all 256 vertices
// are reached from vertex 0.
bool reaches_all(const std::array<std::bitset<256>, 256>& adj) {
    std::bitset<256> visited;
    std::array<uint8_t, 256> queue;
    size_t head = 0, tail = 0;
    visited[0] = true;
    queue[tail++] = 0;
    while (head < tail) {
        const uint8_t u = queue[head++];
        const std::bitset<256> fresh = adj[u] & ~visited;
        if (fresh.none()) continue;
        visited |= fresh;
        for (int v = 0; v < 256; ++v) {
            if (fresh[v]) queue[tail++] = static_cast<uint8_t>(v);
        }
    }
    return visited.all();
}

}  // namespace

bool is_strongly_connected(const IterationGraph& g) {
    if (!reaches_all(g.adj)) return false;
    std::array<std::bitset<256>, 256> rev;
    for (int u = 0; u < 256; ++u) {
        for (int v = 0; v < 256; ++v) {
            if (g.adj[u][v]) rev[v][u] = true;
        }
    }
    return reaches_all(rev);
}

}  // namespace ciprng
