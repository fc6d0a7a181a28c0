#include "lazymatch/matching.hpp"

#include <stdexcept>

namespace lazymatch {

void BipartiteGraph::validate() const {
    if (u_count < 0 || d_count < 0 || static_cast<int>(adj.size()) != u_count)
        throw std::invalid_argument("bipartite graph: adjacency size does not match u_count");
    for (const auto& nbrs : adj) {
        int prev = -1;
        for (int d : nbrs) {
            if (d < 0 || d >= d_count)
                throw std::invalid_argument("bipartite graph: neighbor index out of range");
            if (d <= prev)
                throw std::invalid_argument("bipartite graph: neighbors must be sorted and unique");
            prev = d;
        }
    }
}

namespace {

bool augment(const BipartiteGraph& g, int u, std::vector<int>& pair_of_u,
             std::vector<int>& pair_of_d, std::vector<char>& visited) {
    for (int d : g.adj[u]) {
        if (visited[d]) continue;
        visited[d] = 1;
        if (pair_of_d[d] == -1 || augment(g, pair_of_d[d], pair_of_u, pair_of_d, visited)) {
            pair_of_u[u] = d;
            pair_of_d[d] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
    g.validate();
    Matching m;
    m.pair_of_u.assign(g.u_count, -1);
    m.pair_of_d.assign(g.d_count, -1);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int u = 0; u < g.u_count; ++u) {
            if (m.pair_of_u[u] != -1) continue;
            std::vector<char> visited(g.d_count, 0);
            if (augment(g, u, m.pair_of_u, m.pair_of_d, visited)) {
                ++m.size;
                progress = true;
            }
        }
    }
    return m;
}

bool is_maximum(const BipartiteGraph& g, const Matching& m) {
    auto pair_of_u = m.pair_of_u;
    auto pair_of_d = m.pair_of_d;
    for (int u = 0; u < g.u_count; ++u) {
        if (pair_of_u[u] != -1) continue;
        std::vector<char> visited(g.d_count, 0);
        if (augment(g, u, pair_of_u, pair_of_d, visited)) return false;
    }
    return true;
}

bool has_perfect_matching(const BipartiteGraph& g) {
    if (g.u_count != g.d_count)
        throw std::invalid_argument("has_perfect_matching: part sizes differ");
    return max_matching(g).size == g.u_count;
}

}  // namespace lazymatch
