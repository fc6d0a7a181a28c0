#include "lazymatch/builders.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lazymatch/bounds.hpp"

namespace lazymatch {

std::vector<int> choose_d0(const Assignment& assignment, long long x0) {
    std::vector<int> block;
    block.reserve(static_cast<std::size_t>(x0));
    for (int d = 0; d < assignment.d_count() && static_cast<long long>(block.size()) < x0; ++d)
        if (assignment.owner(d) == -1) block.push_back(d);
    if (static_cast<long long>(block.size()) < x0)
        throw std::logic_error("adversary: not enough unowned servers for the first block");
    return block;
}

BlockChoice choose_di(const Assignment& assignment, const std::vector<char>& retired,
                      const std::vector<int>& specials, long long xi) {
    const long long want = 1 + xi;
    std::vector<char> is_special(assignment.presented(), 0);
    for (int y : specials) is_special[y] = 1;

    // X: unretired servers held by nobody, or by an already-special vertex.
    std::vector<int> x_pool;
    for (int d = 0; d < assignment.d_count(); ++d) {
        if (retired[d]) continue;
        const int o = assignment.owner(d);
        if (o == -1 || is_special[o]) x_pool.push_back(d);
    }

    BlockChoice choice;
    int best_size = -1;
    for (int u = 0; u < assignment.presented(); ++u) {
        if (is_special[u]) continue;
        if (assignment.group_size(u) > best_size) {
            best_size = assignment.group_size(u);
            choice.special_vertex = u;
        }
    }
    if (choice.special_vertex == -1 ||
        static_cast<long long>(x_pool.size()) + best_size < want)
        throw std::logic_error("adversary: no qualifying vertex for the next retired block");

    for (int d : x_pool) {
        if (static_cast<long long>(choice.block.size()) == want) break;
        choice.block.push_back(d);
    }
    for (int d : assignment.group(choice.special_vertex)) {
        if (static_cast<long long>(choice.block.size()) == want) break;
        choice.block.push_back(d);
    }
    std::sort(choice.block.begin(), choice.block.end());
    return choice;
}

AdversaryBuilder::AdversaryBuilder(AdversarySolution solution) : solution_(std::move(solution)) {
    if (!solution_.valid())
        throw std::invalid_argument("adversary: solution does not satisfy the feasibility system");
    if (solution_.x[0] < 0)
        throw std::invalid_argument("adversary: x0 must be nonnegative (normalize first)");
    if (solution_.n > std::numeric_limits<int>::max())
        throw std::invalid_argument("adversary: game size too large");
    n_ = static_cast<int>(solution_.n);
    retired_.assign(n_, 0);

    phase_counts_.push_back(solution_.x[0]);
    for (std::size_t i = 1; i < solution_.x.size(); ++i)
        phase_counts_.push_back(1 + solution_.x[i]);
    phase_counts_.push_back(solution_.n - solution_.k() - solution_.sum());
}

std::vector<int> AdversaryBuilder::unretired() const {
    std::vector<int> result;
    for (int d = 0; d < n_; ++d)
        if (!retired_[d]) result.push_back(d);
    return result;
}

std::vector<int> AdversaryBuilder::leftover_servers() const { return unretired(); }

void AdversaryBuilder::assert_disjoint_from_retired(const Assignment& assignment) const {
    std::vector<char> is_special(assignment.presented(), 0);
    for (int y : specials_) is_special[y] = 1;
    for (int u = 0; u < assignment.presented(); ++u) {
        if (is_special[u]) continue;
        for (int d : assignment.group(u))
            if (retired_[d])
                throw std::logic_error("adversary: non-special group intersects retired servers");
    }
}

void AdversaryBuilder::finalize_boundary(const GameState& state) {
    const std::size_t i = blocks_.size();
    std::vector<int> block;
    if (i == 0) {
        block = choose_d0(state.assignment(), solution_.x[0]);
    } else {
        auto choice = choose_di(state.assignment(), retired_, specials_, solution_.x[i]);
        specials_.push_back(choice.special_vertex);
        block = std::move(choice.block);
    }
    for (int d : block) {
        if (retired_[d]) throw std::logic_error("adversary: block overlaps retired servers");
        retired_[d] = 1;
    }
    blocks_.push_back(std::move(block));
    assert_disjoint_from_retired(state.assignment());
}

std::optional<RoundMove> AdversaryBuilder::next(const GameState& state) {
    if (state.d_count() != n_)
        throw std::invalid_argument("adversary: game must run on d_count == n servers");
    if (state.alpha() > solution_.alpha)
        throw std::invalid_argument("adversary: solution was built for a smaller capacity");

    while (phase_ < phase_counts_.size() && emitted_in_phase_ == phase_counts_[phase_]) {
        if (phase_ + 1 < phase_counts_.size()) finalize_boundary(state);
        ++phase_;
        emitted_in_phase_ = 0;
    }
    if (phase_ == phase_counts_.size()) return std::nullopt;
    ++emitted_in_phase_;
    return RoundMove{state.presented(), unretired()};
}

RandomBuilder::RandomBuilder(std::uint64_t seed, int n, double extra_edge_prob)
    : n_(n), extra_edge_prob_(extra_edge_prob), rng_(seed) {
    if (n < 0) throw std::invalid_argument("random builder: negative n");
    if (extra_edge_prob < 0.0 || extra_edge_prob > 1.0)
        throw std::invalid_argument("random builder: extra_edge_prob outside [0, 1]");
    planted_.resize(n);
    for (int i = 0; i < n; ++i) planted_[i] = i;
    std::shuffle(planted_.begin(), planted_.end(), rng_);
}

std::optional<RoundMove> RandomBuilder::next(const GameState& state) {
    const int u = state.presented();
    if (u >= n_) return std::nullopt;
    if (state.d_count() != n_)
        throw std::invalid_argument("random builder: game must run on d_count == n servers");
    std::vector<int> neighbors;
    std::bernoulli_distribution extra(extra_edge_prob_);
    for (int d = 0; d < n_; ++d)
        if (d == planted_[u] || extra(rng_)) neighbors.push_back(d);
    return RoundMove{u, std::move(neighbors)};
}

namespace {

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        values.push_back(std::stoll(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return values;
}

}  // namespace

std::unique_ptr<Builder> make_builder(const std::string& spec, long long n, long long alpha,
                                      std::uint64_t seed) {
    const std::size_t colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "adversary") {
        AdversarySolution solution{n, alpha, {}};
        const std::size_t x_at = args.find("x=");
        if (x_at == std::string::npos) {
            solution.x = max_sum_exact(n, alpha).witness;
        } else {
            solution.x = parse_int_list(args.substr(x_at + 2));
            if (!solution.valid())
                throw std::invalid_argument("builder spec: infeasible adversary solution");
        }
        const std::size_t k_at = args.find("k=");
        if (k_at != std::string::npos && std::stoll(args.substr(k_at + 2)) != solution.k())
            throw std::invalid_argument("builder spec: k does not match the length of x");
        return std::make_unique<AdversaryBuilder>(std::move(solution));
    }
    if (kind == "random") {
        double p = 0.5;
        std::uint64_t builder_seed = seed;
        const std::size_t p_at = args.find("p=");
        if (p_at != std::string::npos) p = std::stod(args.substr(p_at + 2));
        const std::size_t seed_at = args.find("seed=");
        if (seed_at != std::string::npos) builder_seed = std::stoull(args.substr(seed_at + 5));
        if (n > std::numeric_limits<int>::max())
            throw std::invalid_argument("builder spec: n too large for the random builder");
        return std::make_unique<RandomBuilder>(builder_seed, static_cast<int>(n), p);
    }
    throw std::invalid_argument("unknown builder: " + spec);
}

}  // namespace lazymatch
