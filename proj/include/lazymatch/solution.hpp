#pragma once

#include <span>
#include <vector>

namespace lazymatch {

// A worst-case certificate for the game of size n with capacity alpha:
// phase counts x = (x0, ..., xk), k >= 1. Feasibility means
//
//   (1 + alpha) * x0 <= n,
//   (x0 + ... + xi) * (1 + xi) <= n - i   for i = 1..k,
//   x1 >= x2 >= ... >= xk >= 0,
//   x0 + ... + xk >= 0.
//
// x0 may be negative in general; the adversary construction requires
// x0 >= 0 (normalize_solution produces such a form without losing sum).
struct AdversarySolution {
    long long n = 0;
    long long alpha = 1;
    std::vector<long long> x;

    long long k() const { return static_cast<long long>(x.size()) - 1; }
    long long sum() const;
    bool valid() const;
};

bool validate_solution(long long n, long long alpha, std::span<const long long> x);

}  // namespace lazymatch
