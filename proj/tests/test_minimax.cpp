#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lazymatch/bounds.hpp"
#include "lazymatch/minimax.hpp"

using namespace lazymatch;

TEST_CASE("worked values") {
    GreedyScheduler greedy;
    BalanceScheduler balance;
    CHECK(minimax_value(2, 1, greedy) == 1);
    CHECK(minimax_value(2, 2, balance) == 2);
    CHECK(minimax_value(4, 2, balance) == 3);
    CHECK(minimax_value(4, 2, balance) == 4 - max_sum_exact(4, 2).best_sum);
}

TEST_CASE("parallel kernel agrees with the serial reference") {
    BalanceScheduler balance;
    GreedyScheduler greedy;
    for (int n = 1; n <= 3; ++n)
        for (int alpha : {1, 2}) {
            CAPTURE(n);
            CAPTURE(alpha);
            CHECK(minimax_value(n, alpha, balance) == minimax_value_serial(n, alpha, balance));
            CHECK(minimax_value(n, alpha, greedy) == minimax_value_serial(n, alpha, greedy));
        }
    CHECK(minimax_value(4, 2, balance) == minimax_value_serial(4, 2, balance));
}

TEST_CASE("greedy never beats the balancing strategy at tiny sizes") {
    BalanceScheduler balance;
    GreedyScheduler greedy;
    for (int n = 1; n <= 4; ++n)
        for (int alpha : {1, 2}) {
            CAPTURE(n);
            CAPTURE(alpha);
            CHECK(minimax_value(n, alpha, greedy) <= minimax_value(n, alpha, balance));
        }
}

TEST_CASE("cap enforcement") {
    BalanceScheduler balance;
    CHECK_THROWS_AS(minimax_value(5, 2, balance), std::invalid_argument);
    CHECK_THROWS_AS(minimax_value(0, 2, balance), std::invalid_argument);
    CHECK_NOTHROW(minimax_value(2, 1, balance, 2));
}
