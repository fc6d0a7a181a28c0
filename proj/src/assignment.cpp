#include "lazymatch/assignment.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lazymatch {

Assignment::Assignment(int d_count) {
    if (d_count < 0) throw std::invalid_argument("assignment: negative d_count");
    owner_.assign(d_count, -1);
}

int Assignment::nonempty_groups() const {
    int count = 0;
    for (const auto& g : groups_)
        if (!g.empty()) ++count;
    return count;
}

void Assignment::push_vertex() { groups_.emplace_back(); }

void Assignment::assign(int u, int d) {
    assert(owner_[d] == -1);
    auto& g = groups_[u];
    g.insert(std::lower_bound(g.begin(), g.end(), d), d);
    owner_[d] = u;
}

void Assignment::release(int d) {
    const int u = owner_[d];
    assert(u != -1);
    auto& g = groups_[u];
    g.erase(std::lower_bound(g.begin(), g.end(), d));
    owner_[d] = -1;
}

void Assignment::transfer(int d, int taker) {
    release(d);
    assign(taker, d);
}

bool is_available(const Assignment& a, std::span<const int> neighbors, int u, int d) {
    if (!std::binary_search(neighbors.begin(), neighbors.end(), d)) return false;
    const int o = a.owner(d);
    return o == -1 || o == u || a.group_size(o) > 1;
}

bool is_strongly_available(const Assignment& a, std::span<const int> neighbors, int u, int d) {
    return a.owner(d) == -1 && is_available(a, neighbors, u, d);
}

bool is_ready(const Assignment& a, std::span<const int> neighbors, int u, int e) {
    if (e == u) return false;
    for (int d : a.group(e))
        if (is_available(a, neighbors, u, d)) return true;
    return false;
}

}  // namespace lazymatch
