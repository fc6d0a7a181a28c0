#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lazymatch/bounds.hpp"
#include "lazymatch/engine.hpp"

using namespace lazymatch;

namespace {

std::vector<int> range_vec(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i < hi; ++i) v.push_back(i);
    return v;
}

AdversarySolution random_feasible(std::mt19937_64& rng, long long max_n, long long max_alpha) {
    std::uniform_int_distribution<long long> n_dist(2, max_n);
    std::uniform_int_distribution<long long> alpha_dist(1, max_alpha);
    const long long n = n_dist(rng);
    const long long alpha = alpha_dist(rng);
    std::uniform_int_distribution<long long> x0_dist(0, n / (1 + alpha));
    std::vector<long long> x{x0_dist(rng)};

    long long prefix = x[0];
    long long cap = n;
    std::uniform_int_distribution<int> keep(0, 3);
    for (long long i = 1; static_cast<long long>(x.size()) <= n; ++i) {
        long long vmax = -1;
        for (long long v = std::min(cap, n); v >= 0; --v)
            if ((prefix + v) * (1 + v) <= n - i) {
                vmax = v;
                break;
            }
        if (vmax < 0) break;
        std::uniform_int_distribution<long long> v_dist(0, vmax);
        const long long v = v_dist(rng);
        x.push_back(v);
        prefix += v;
        cap = v;
        if (keep(rng) == 0) break;
    }
    if (x.size() == 1) x.push_back(0);
    REQUIRE(validate_solution(n, alpha, x));
    return AdversarySolution{n, alpha, x};
}

}  // namespace

TEST_CASE("feasibility checker") {
    CHECK(validate_solution(18, 2, std::vector<long long>{6, 1, 1}));
    // (6+2)*(1+2) = 24 > 17 breaks the first tail constraint
    CHECK_FALSE(validate_solution(18, 2, std::vector<long long>{6, 2, 1}));
    CHECK(validate_solution(5, 1, std::vector<long long>{2, 0}));

    CHECK_FALSE(validate_solution(18, 2, std::vector<long long>{7, 1}));     // capacity row
    CHECK_FALSE(validate_solution(18, 2, std::vector<long long>{6, 1, 2}));  // not non-increasing
    CHECK_FALSE(validate_solution(18, 2, std::vector<long long>{6, 1, -1}));
    CHECK(validate_solution(18, 2, std::vector<long long>{-2, 2, 1}));  // negative x0 is legal
    CHECK_FALSE(validate_solution(18, 2, std::vector<long long>{-2, 1, 0}));  // sum < 0
}

TEST_CASE("the worked 18-server game against the balancing scheduler") {
    BalanceScheduler balance;
    AdversaryBuilder builder(AdversarySolution{18, 2, {6, 1, 1}});
    const auto record = run_game(balance, builder, GameConfig{2, 18, false});

    CHECK(record.result.matched_count == 10);
    CHECK(record.result.game_size_n == 18);
    REQUIRE(record.transcript.moves.size() == 18);

    // phase neighborhoods
    for (int u = 0; u < 6; ++u) CHECK(record.transcript.moves[u].neighbors == range_vec(0, 18));
    for (int u = 6; u < 8; ++u) CHECK(record.transcript.moves[u].neighbors == range_vec(0, 12));
    const std::vector<int> after_two_blocks = {0, 1, 2, 3, 6, 7, 8, 9, 10, 11};
    for (int u = 8; u < 10; ++u) CHECK(record.transcript.moves[u].neighbors == after_two_blocks);
    const std::vector<int> leftover = {0, 1, 2, 3, 6, 7, 8, 9};
    for (int u = 10; u < 18; ++u) CHECK(record.transcript.moves[u].neighbors == leftover);

    // retired blocks and specials, fixed by the canonical tie-breaks
    REQUIRE(builder.retired_blocks().size() == 3);
    CHECK(builder.retired_blocks()[0] == range_vec(12, 18));
    CHECK(builder.retired_blocks()[1] == std::vector<int>{4, 5});
    CHECK(builder.retired_blocks()[2] == std::vector<int>{10, 11});
    CHECK(builder.special_vertices() == std::vector<int>{2, 5});
    CHECK(builder.leftover_servers() == leftover);

    // the two survivors of size two are exactly the specials
    int pairs = 0;
    for (int u = 0; u < 18; ++u)
        if (record.result.per_u_groups[u].size() == 2) {
            ++pairs;
            CHECK((u == 2 || u == 5));
        }
    CHECK(pairs == 2);

    std::vector<std::vector<int>> adj;
    for (const auto& move : record.transcript.moves) adj.push_back(move.neighbors);
    CHECK(has_perfect_matching(BipartiteGraph{18, 18, adj}));
}

TEST_CASE("first block avoids everything the scheduler holds") {
    GameState state(GameConfig{2, 18, false});
    std::vector<int> all = range_vec(0, 18);
    for (int u = 0; u < 6; ++u) state.apply_round(RoundMove{u, all}, {2 * u, 2 * u + 1});
    CHECK(choose_d0(state.assignment(), 6) == range_vec(12, 18));

    SUBCASE("empty when x0 is zero") { CHECK(choose_d0(state.assignment(), 0).empty()); }
    SUBCASE("lowest indices when nothing is held") {
        const GameState idle(GameConfig{2, 18, false});
        CHECK(choose_d0(idle.assignment(), 4) == range_vec(0, 4));
    }
}

TEST_CASE("later blocks prefer unheld servers") {
    GameState state(GameConfig{3, 6, false});
    state.apply_round(RoundMove{0, {0, 1, 2, 3, 4, 5}}, {0, 1, 2});
    const std::vector<char> retired(6, 0);

    SUBCASE("plenty of unheld servers: block avoids groups entirely") {
        const auto choice = choose_di(state.assignment(), retired, {}, 1);
        CHECK(choice.block == std::vector<int>{3, 4});
        CHECK(choice.special_vertex == 0);
    }
    SUBCASE("xi = 0 takes a single server") {
        const auto choice = choose_di(state.assignment(), retired, {}, 0);
        CHECK(choice.block.size() == 1);
    }
    SUBCASE("tops up from the largest group when unheld servers run out") {
        const auto choice = choose_di(state.assignment(), retired, {}, 4);
        CHECK(choice.special_vertex == 0);
        CHECK(choice.block == std::vector<int>{0, 1, 3, 4, 5});
    }
}

TEST_CASE("adversary rejects bad setups") {
    CHECK_THROWS_AS(AdversaryBuilder(AdversarySolution{18, 2, {6, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(AdversaryBuilder(AdversarySolution{18, 2, {-2, 2, 1}}), std::invalid_argument);
    AdversaryBuilder builder(AdversarySolution{6, 2, {2, 0}});
    BalanceScheduler balance;
    CHECK_THROWS_AS(run_game(balance, builder, GameConfig{2, 7, false}), std::invalid_argument);
    AdversaryBuilder weak(AdversarySolution{6, 2, {2, 0}});
    CHECK_THROWS_AS(run_game(balance, weak, GameConfig{3, 6, false}), std::invalid_argument);
}

TEST_CASE("random builder") {
    SUBCASE("complete graph: greedy matches everything") {
        GreedyScheduler greedy;
        RandomBuilder builder(5, 10, 1.0);
        const auto record = run_game(greedy, builder, GameConfig{1, 10, false});
        CHECK(record.result.matched_count == 10);
        CHECK(record.result.game_size_n == 10);
    }
    SUBCASE("bare planted matching: both strategies match everything") {
        for (const char* name : {"balance", "greedy"}) {
            const auto scheduler = make_scheduler(name);
            RandomBuilder builder(11, 8, 0.0);
            const auto record = run_game(*scheduler, builder, GameConfig{2, 8, false});
            CHECK(record.result.matched_count == 8);
        }
    }
    SUBCASE("same seed, same moves") {
        NoopScheduler noop;
        RandomBuilder a(123, 9, 0.4), b(123, 9, 0.4);
        const auto ra = run_game(noop, a, GameConfig{2, 9, false});
        const auto rb = run_game(noop, b, GameConfig{2, 9, false});
        CHECK(ra.transcript == rb.transcript);
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(RandomBuilder(1, 5, 1.5), std::invalid_argument);
        CHECK_THROWS_AS(RandomBuilder(1, -1, 0.5), std::invalid_argument);
    }
}

TEST_CASE("unbounded capacity plays through the adversary") {
    // With alpha >= n the certificate pins x0 = 0; the whole fight happens
    // in the middle phases.
    const auto exact = max_sum_exact(5, 5);
    CHECK(exact.witness[0] == 0);
    BalanceScheduler balance;
    AdversaryBuilder builder(AdversarySolution{5, 5, exact.witness});
    const auto record = run_game(balance, builder, GameConfig{1, 5, true});
    CHECK(record.result.matched_count == 5 - exact.best_sum);
    CHECK(record.result.game_size_n == 5);
}

TEST_CASE("builder registry") {
    CHECK(make_builder("adversary", 18, 2)->name() == "adversary");
    CHECK(make_builder("adversary:x=6,1,1", 18, 2)->name() == "adversary");
    CHECK(make_builder("adversary:k=2,x=6,1,1", 18, 2)->name() == "adversary");
    CHECK(make_builder("random:p=0.25", 10, 2, 3)->name() == "random");
    CHECK_THROWS_AS(make_builder("bogus", 10, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_builder("adversary:x=6,2,1", 18, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_builder("adversary:k=3,x=6,1,1", 18, 2), std::invalid_argument);

    // seed= in the spec string pins the stream exactly like the seed argument
    NoopScheduler noop;
    auto a = make_builder("random:seed=9,p=0.4", 8, 2, 1);
    auto b = make_builder("random:p=0.4", 8, 2, 9);
    const auto ra = run_game(noop, *a, GameConfig{2, 8, false});
    const auto rb = run_game(noop, *b, GameConfig{2, 8, false});
    CHECK(ra.transcript == rb.transcript);
}

TEST_CASE("fuzz: every scheduler stays under the certified ceiling") {
    std::mt19937_64 rng(2026);
    const std::vector<std::string> names = {"balance", "greedy", "noop", "random"};
    for (int trial = 0; trial < 120; ++trial) {
        const auto solution = random_feasible(rng, 25, 3);
        CAPTURE(trial);
        CAPTURE(solution.n);
        CAPTURE(solution.alpha);
        for (const auto& name : names) {
            const auto scheduler = make_scheduler(name, 1000 + trial);
            AdversaryBuilder builder(solution);
            const auto record =
                run_game(*scheduler, builder,
                         GameConfig{static_cast<int>(solution.alpha),
                                    static_cast<int>(solution.n), false});
            CHECK(record.result.matched_count <= solution.n - solution.sum());
            CHECK(record.result.game_size_n == solution.n);
            CHECK(has_perfect_matching(BipartiteGraph{
                static_cast<int>(record.transcript.moves.size()), static_cast<int>(solution.n),
                [&] {
                    std::vector<std::vector<int>> adj;
                    for (const auto& m : record.transcript.moves) adj.push_back(m.neighbors);
                    return adj;
                }()}));
        }
    }
}
