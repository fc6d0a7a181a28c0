#pragma once

#include <span>
#include <vector>

namespace lazymatch {

// The family {m(u)} of pairwise-disjoint server groups, with a reverse
// owner index. Vertices of U are presentation indices 0,1,2,...; servers
// are indices into D. Groups are kept sorted ascending.
class Assignment {
public:
    explicit Assignment(int d_count);

    int d_count() const { return static_cast<int>(owner_.size()); }
    int presented() const { return static_cast<int>(groups_.size()); }
    int owner(int d) const { return owner_[d]; }  // -1 when unowned
    const std::vector<int>& group(int u) const { return groups_[u]; }
    int group_size(int u) const { return static_cast<int>(groups_[u].size()); }
    const std::vector<std::vector<int>>& groups() const { return groups_; }
    int nonempty_groups() const;

    void push_vertex();               // next vertex arrives with an empty group
    void assign(int u, int d);        // d must be unowned
    void release(int d);              // remove d from its owner's group
    void transfer(int d, int taker);  // release + assign in one step

    bool operator==(const Assignment&) const = default;

private:
    std::vector<std::vector<int>> groups_;
    std::vector<int> owner_;
};

// d is available for the arriving vertex u when d lies in N(u) and no other
// vertex holds d as the sole element of its group. `neighbors` is N(u),
// sorted ascending; `u` is excluded from the sole-element scan so the
// predicates stay correct against mid-round states where m(u) is partially
// built.
bool is_available(const Assignment& a, std::span<const int> neighbors, int u, int d);

// Available for u and currently unowned.
bool is_strongly_available(const Assignment& a, std::span<const int> neighbors, int u, int d);

// e is ready for u when m(e) contains an element available for u.
bool is_ready(const Assignment& a, std::span<const int> neighbors, int u, int e);

}  // namespace lazymatch
