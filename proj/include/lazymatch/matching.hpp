#pragma once

#include <vector>

namespace lazymatch {

// Bipartite graph with parts U (tasks, revealed over time) and D (servers).
struct BipartiteGraph {
    int u_count = 0;
    int d_count = 0;
    std::vector<std::vector<int>> adj;  // adj[u]: neighbors in D, sorted ascending, unique

    void validate() const;  // throws std::invalid_argument on malformed adjacency
};

struct Matching {
    std::vector<int> pair_of_u;  // u -> matched d, or -1
    std::vector<int> pair_of_d;  // d -> matched u, or -1
    int size = 0;
};

// Maximum-cardinality matching via augmenting paths in ascending vertex
// order. The search repeats full passes until one finds no augmenting path
// from any free u, so the result carries its own maximality certificate.
Matching max_matching(const BipartiteGraph& g);

// True when no augmenting path exists from any free u.
bool is_maximum(const BipartiteGraph& g, const Matching& m);

// Requires u_count == d_count; throws std::invalid_argument otherwise.
bool has_perfect_matching(const BipartiteGraph& g);

}  // namespace lazymatch
