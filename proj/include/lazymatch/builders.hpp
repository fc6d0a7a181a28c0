#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "lazymatch/game.hpp"
#include "lazymatch/solution.hpp"

namespace lazymatch {

class Builder {
public:
    virtual ~Builder() = default;
    virtual std::string name() const = 0;
    // Next vertex to present, or nullopt when done. Builders may read the
    // live assignment: adaptive play is the point.
    virtual std::optional<RoundMove> next(const GameState& state) = 0;
};

// Phase-boundary block selection, exposed for direct testing.
//
// choose_d0: the lowest-index x0 servers owned by nobody. Feasible for any
// rule-abiding scheduler because at most alpha * x0 <= n - x0 servers are
// owned after x0 rounds.
std::vector<int> choose_d0(const Assignment& assignment, long long x0);

struct BlockChoice {
    std::vector<int> block;   // sorted ascending
    int special_vertex = -1;  // the newly designated special vertex y_i
};

// choose_di: builds the next retired block of size 1 + xi from X
// (unretired servers owned by nobody or by an existing special vertex,
// preferred, lowest index first) topped up from the group of the largest
// non-special vertex, which becomes special. Throws std::logic_error when
// no vertex qualifies; the phase accounting guarantees one always does.
BlockChoice choose_di(const Assignment& assignment, const std::vector<char>& retired,
                      const std::vector<int>& specials, long long xi);

// Adaptive worst-case builder driven by a feasible solution (x0,...,xk)
// with x0 >= 0. Play proceeds in phases 0..k+1 on |U| = |D| = n. Phase 0
// presents x0 vertices adjacent to all of D; phase i (1 <= i <= k)
// presents 1 + xi vertices adjacent to every not-yet-retired server; the
// final phase presents the remaining n - k - (x0+...+xk) vertices adjacent
// to the never-retired set S. At each phase boundary a block is retired so
// that, apart from the special vertices, no group intersects retired
// servers; that confines nonempty groups to the specials plus S, capping
// any scheduler at n - (x0+...+xk) matched vertices. The invariant is
// asserted after every boundary.
class AdversaryBuilder final : public Builder {
public:
    explicit AdversaryBuilder(AdversarySolution solution);  // throws std::invalid_argument

    std::string name() const override { return "adversary"; }
    std::optional<RoundMove> next(const GameState& state) override;

    const AdversarySolution& solution() const { return solution_; }
    const std::vector<std::vector<int>>& retired_blocks() const { return blocks_; }
    const std::vector<int>& special_vertices() const { return specials_; }
    std::vector<int> leftover_servers() const;  // S, valid once all blocks are chosen

private:
    void finalize_boundary(const GameState& state);
    void assert_disjoint_from_retired(const Assignment& assignment) const;
    std::vector<int> unretired() const;

    AdversarySolution solution_;
    int n_ = 0;
    std::vector<long long> phase_counts_;  // phases 0..k+1
    std::size_t phase_ = 0;
    long long emitted_in_phase_ = 0;
    std::vector<char> retired_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> specials_;
};

// Presents n vertices over a hidden random permutation that plants one
// perfect-matching edge per vertex; every other edge appears independently
// with probability extra_edge_prob. Deterministic per seed.
class RandomBuilder final : public Builder {
public:
    RandomBuilder(std::uint64_t seed, int n, double extra_edge_prob);

    std::string name() const override { return "random"; }
    std::optional<RoundMove> next(const GameState& state) override;

private:
    int n_;
    double extra_edge_prob_;
    std::mt19937_64 rng_;
    std::vector<int> planted_;
};

// Selection by spec string: "adversary" (witness of the integer maximizer
// for this n and alpha), "adversary:x=6,1,1", "random", "random:p=0.5".
// Throws std::invalid_argument for unknown or malformed specs.
std::unique_ptr<Builder> make_builder(const std::string& spec, long long n, long long alpha,
                                      std::uint64_t seed = 0);

}  // namespace lazymatch
