#pragma once

#include <span>
#include <vector>

#include "lazymatch/rational.hpp"
#include "lazymatch/solution.hpp"

namespace lazymatch {

// Rewrites a feasible solution into one with x0 = floor(n / (1 + alpha))
// without decreasing the sum: while x0 is below the target, move one unit
// from the last entry still equal to x1; once everything past x0 is zero,
// jump straight to (target, 0). Throws std::invalid_argument on infeasible
// input.
std::vector<long long> normalize_solution(long long n, long long alpha, std::vector<long long> x);

struct MaxSumResult {
    long long best_sum = 0;
    std::vector<long long> witness;  // feasible, attains best_sum, x0 = floor(n/(1+alpha))
};

// Exact maximum of x0 + ... + xk over feasible solutions, with x0 pinned to
// floor(n / (1 + alpha)) (sound: normalization never decreases the sum).
// Depth-first search over non-increasing positive tails with the prefix
// constraint as the branch bound.
MaxSumResult max_sum_exact(long long n, long long alpha);

// Change of variables: m = 1 + x1 and y_j = #{i > 0 : 1 + x_i = j}. The sum
// objective carries over as x0 + sum_j (j-1) y_j = x0 + x1 + ... + xk.
std::vector<long long> psi_transform(std::span<const long long> x);

// The linear relaxation the transformed solutions live in:
//   row i (1 <= i <= m):  sum_{j=i..m} (1 + (j-1) i) y_j <= n - i*x0.
struct PsiSystem {
    long long n = 0;
    long long m = 1;
    long long x0 = 0;

    void validate() const;  // m >= 1, x0 >= 0, n - m*x0 >= 0
};

struct PrimalSolution {
    std::vector<Rational> y;  // y[j-1] = y_j
    Rational y0;              // extended value: x0 + sum (j-1) y_j
};

struct DualSolution {
    std::vector<Rational> z;  // z[i-1] = z_i
};

// Row values for identity checks: P_i(y) and D_j(z).
Rational primal_row(const PsiSystem& sys, std::span<const Rational> y, long long i);
Rational dual_row(std::span<const Rational> z, long long j);

// Unique solution of P_i(y) = n - i*x0 for all i, from the closed-form
// recurrence
//   y_m     = (n - m*x0) / (1 + m(m-1)),
//   y_{m-1} = (x0 + (m-1) y_m) / (1 + (m-1)(m-2)),
//   y_i     = y_{i+1} (i+1)^2 / (1 - i + i^2)     for i = m-2..1.
// The result is postcondition-checked against the defining identities and
// nonnegativity; failures throw std::logic_error.
PrimalSolution primal_closed_form(const PsiSystem& sys);

// Unique solution of D_j(z) = j - 1 for all j, from
//   z_1 = 0,  z_2 = 1/3,  z_{j+1} = z_j (j-1)^2 / (1 + j + j^2).
// Postcondition-checked like the primal.
DualSolution dual_closed_form(long long m);

// Exact equality of the two objectives, sum (j-1) y_j and
// sum (n - i*x0) z_i.
bool strong_duality_check(const PsiSystem& sys);

// Worst-case deficit fraction of the relaxation:
//   F(z, m) = ((m-1) + z) / m * prod_{i=1..m-1} (i + i^2) / (1 + i + i^2),
// so that the relaxed optimum equals n * F(x0/n, m).
Rational lp_deficit_fraction(const Rational& z, long long m);

struct BalBounds {
    long long lower = 0;  // from the relaxation: n - sup_m y0(m), rounded up
    long long upper = 0;  // from floored solutions: n - x0 - max_m sum (j-1) floor(y_j)
};

// Integer bracket on the worst-case matching size of the balancing
// scheduler at finite n; m ranges over 1..floor(n/x0) (1..n when x0 = 0).
BalBounds bal_bounds(long long n, long long alpha);

struct RatioResult {
    long long alpha = 1;
    Rational exact;
    double approx = 0.0;
};

// Exact worst-case ratio for capacity alpha:
//   1 - alpha/(1+alpha) * prod_{i=1..alpha-1} (i + i^2) / (1 + i + i^2),
// which also equals 1 - F(1/(1+alpha), 1+alpha).
RatioResult competitive_ratio(long long alpha);

struct LimitEstimate {
    long long terms = 0;
    double truncated_product = 0.0;  // prod_{i=1..terms} (i+i^2)/(1+i+i^2)
    double analytic_product = 0.0;   // pi / cosh(sqrt(3) pi / 2)
    double abs_difference = 0.0;
    double truncated_ratio = 0.0;    // 1 - truncated_product
    double analytic_ratio = 0.0;     // 1 - analytic_product
};

// Large-capacity limit of the ratio, by truncated product and by the
// analytic constant, with their difference.
LimitEstimate ratio_infinity(long long terms);

}  // namespace lazymatch
