#include "lazymatch/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lazymatch {

std::vector<long long> normalize_solution(long long n, long long alpha, std::vector<long long> x) {
    if (!validate_solution(n, alpha, x))
        throw std::invalid_argument("normalize_solution: infeasible input");
    const long long target = n / (1 + alpha);
    while (x[0] < target) {
        if (x[1] == 0) return {target, 0};
        std::size_t j = 1;
        while (j + 1 < x.size() && x[j + 1] == x[1]) ++j;
        ++x[0];
        --x[j];
    }
    return x;
}

MaxSumResult max_sum_exact(long long n, long long alpha) {
    if (n < 1 || alpha < 1)
        throw std::invalid_argument("max_sum_exact: need n >= 1 and alpha >= 1");
    const long long x0 = n / (1 + alpha);
    MaxSumResult best{x0, {x0, 0}};

    const auto feasible_max = [n](long long prefix, long long depth, long long cap) {
        const long long limit = n - depth;
        long long vmax = 0;
        for (long long lo = 1, hi = std::min(cap, n); lo <= hi;) {
            const long long mid = lo + (hi - lo) / 2;
            if (static_cast<__int128>(prefix + mid) * (1 + mid) <= limit) {
                vmax = mid;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        return vmax;
    };

    // Depth-first over non-increasing positive tails, largest value first,
    // with an explicit stack. A tail extended at depth d ends with some
    // positive x_k at k >= d, so its total obeys 2 * total <= n - d; levels
    // that cannot beat the incumbent are cut.
    std::vector<long long> current{x0};
    long long prefix = x0;
    long long depth = 1;
    long long candidate = feasible_max(prefix, depth, n);
    while (true) {
        if (candidate >= 1 && n - depth >= 2 * (best.best_sum + 1)) {
            current.push_back(candidate);
            prefix += candidate;
            ++depth;
            if (prefix > best.best_sum) {
                best.best_sum = prefix;
                best.witness = current;
            }
            candidate = feasible_max(prefix, depth, candidate);
        } else {
            if (current.size() == 1) break;
            const long long used = current.back();
            current.pop_back();
            prefix -= used;
            --depth;
            candidate = used - 1;  // smaller values stay feasible
        }
    }
    return best;
}

std::vector<long long> psi_transform(std::span<const long long> x) {
    if (x.size() < 2 || x[1] < 0)
        throw std::invalid_argument("psi_transform: need a solution with k >= 1");
    std::vector<long long> y(static_cast<std::size_t>(1 + x[1]), 0);
    for (std::size_t i = 1; i < x.size(); ++i) ++y[static_cast<std::size_t>(x[i])];
    return y;
}

void PsiSystem::validate() const {
    if (m < 1) throw std::invalid_argument("psi system: m must be >= 1");
    if (x0 < 0) throw std::invalid_argument("psi system: x0 must be >= 0");
    if (n - m * x0 < 0) throw std::invalid_argument("psi system: requires n - m*x0 >= 0");
}

Rational primal_row(const PsiSystem& sys, std::span<const Rational> y, long long i) {
    Rational total = 0;
    for (long long j = i; j <= sys.m; ++j) total += Rational(1 + (j - 1) * i) * y[j - 1];
    return total;
}

Rational dual_row(std::span<const Rational> z, long long j) {
    Rational total = 0;
    for (long long i = 1; i <= j; ++i) total += Rational(1 + (j - 1) * i) * z[i - 1];
    return total;
}

namespace {

std::vector<Rational> primal_unchecked(const PsiSystem& sys) {
    const long long m = sys.m;
    std::vector<Rational> y(static_cast<std::size_t>(m));
    y[m - 1] = Rational(sys.n - m * sys.x0, 1 + m * (m - 1));
    if (m >= 2) {
        const Rational top = Rational(sys.x0) + Rational(m - 1) * y[m - 1];
        y[m - 2] = top / Rational(1 + (m - 1) * (m - 2));
    }
    for (long long i = m - 2; i >= 1; --i)
        y[i - 1] = y[i] * Rational((i + 1) * (i + 1), 1 - i + i * i);
    return y;
}

Rational extended_y0(const PsiSystem& sys) {
    Rational value((sys.m - 1) * sys.n + sys.x0, sys.m);
    for (long long i = 1; i <= sys.m - 1; ++i) value *= Rational(i + i * i, 1 + i + i * i);
    return value;
}

}  // namespace

PrimalSolution primal_closed_form(const PsiSystem& sys) {
    sys.validate();
    PrimalSolution sol;
    sol.y = primal_unchecked(sys);
    sol.y0 = extended_y0(sys);

    // P_i(y) splits into suffix sums: P_i = sum_{j>=i} y_j + i * sum_{j>=i} (j-1) y_j,
    // so all rows are checked in one backward pass.
    Rational suffix_plain = 0;
    Rational suffix_weighted = 0;
    for (long long i = sys.m; i >= 1; --i) {
        if (sol.y[i - 1] < 0) throw std::logic_error("primal closed form: negative entry");
        suffix_plain += sol.y[i - 1];
        suffix_weighted += Rational(i - 1) * sol.y[i - 1];
        if (suffix_plain + Rational(i) * suffix_weighted != Rational(sys.n - i * sys.x0))
            throw std::logic_error("primal closed form: row identity failed");
    }
    if (Rational(sys.x0) + suffix_weighted != sol.y0)
        throw std::logic_error("primal closed form: objective does not match the extended value");
    return sol;
}

DualSolution dual_closed_form(long long m) {
    if (m < 1) throw std::invalid_argument("dual_closed_form: m must be >= 1");
    DualSolution sol;
    sol.z.assign(static_cast<std::size_t>(m), Rational(0));
    if (m >= 2) sol.z[1] = Rational(1, 3);
    for (long long j = 2; j <= m - 1; ++j)
        sol.z[j] = sol.z[j - 1] * Rational((j - 1) * (j - 1), 1 + j + j * j);

    // D_j(z) = sum_{i<=j} z_i + (j-1) * sum_{i<=j} i z_i, one forward pass.
    Rational prefix_plain = 0;
    Rational prefix_weighted = 0;
    for (long long j = 1; j <= m; ++j) {
        if (sol.z[j - 1] < 0) throw std::logic_error("dual closed form: negative entry");
        prefix_plain += sol.z[j - 1];
        prefix_weighted += Rational(j) * sol.z[j - 1];
        if (prefix_plain + Rational(j - 1) * prefix_weighted != Rational(j - 1))
            throw std::logic_error("dual closed form: row identity failed");
    }
    return sol;
}

bool strong_duality_check(const PsiSystem& sys) {
    sys.validate();
    const auto y = primal_unchecked(sys);
    const auto dual = dual_closed_form(sys.m);
    Rational primal_obj = 0;
    for (long long j = 1; j <= sys.m; ++j) primal_obj += Rational(j - 1) * y[j - 1];
    Rational dual_obj = 0;
    for (long long i = 1; i <= sys.m; ++i)
        dual_obj += Rational(sys.n - i * sys.x0) * dual.z[i - 1];
    return primal_obj == dual_obj;
}

Rational lp_deficit_fraction(const Rational& z, long long m) {
    if (m < 1) throw std::invalid_argument("lp_deficit_fraction: m must be >= 1");
    Rational value = (Rational(m - 1) + z) / m;
    for (long long i = 1; i <= m - 1; ++i) value *= Rational(i + i * i, 1 + i + i * i);
    return value;
}

BalBounds bal_bounds(long long n, long long alpha) {
    if (n < 1 || alpha < 1)
        throw std::invalid_argument("bal_bounds: need n >= 1 and alpha >= 1");
    const long long x0 = n / (1 + alpha);
    const long long m_max = x0 == 0 ? n : n / x0;

    Rational best_relaxed = x0;
    long long best_rounded = 0;
    for (long long m = 1; m <= m_max; ++m) {
        const PsiSystem sys{n, m, x0};
        const auto y = primal_unchecked(sys);
        const Rational y0 = m == 1 ? Rational(x0) : y[0];
        if (y0 > best_relaxed) best_relaxed = y0;
        long long rounded = 0;
        for (long long j = 2; j <= m; ++j)
            rounded += (j - 1) * rational_floor(y[j - 1]).convert_to<long long>();
        if (rounded > best_rounded) best_rounded = rounded;
    }

    BalBounds bounds;
    bounds.lower = n - rational_floor(best_relaxed).convert_to<long long>();
    bounds.upper = n - x0 - best_rounded;
    return bounds;
}

RatioResult competitive_ratio(long long alpha) {
    if (alpha < 1) throw std::invalid_argument("competitive_ratio: alpha must be >= 1");
    Rational deficit(alpha, 1 + alpha);
    for (long long i = 1; i <= alpha - 1; ++i) deficit *= Rational(i + i * i, 1 + i + i * i);
    RatioResult result;
    result.alpha = alpha;
    result.exact = Rational(1) - deficit;
    result.approx = rational_double(result.exact);
    return result;
}

LimitEstimate ratio_infinity(long long terms) {
    if (terms < 1) throw std::invalid_argument("ratio_infinity: need at least one term");
    LimitEstimate est;
    est.terms = terms;
    double product = 1.0;
    for (long long i = 1; i <= terms; ++i)
        product *= static_cast<double>(i + i * i) / static_cast<double>(1 + i + i * i);
    est.truncated_product = product;
    est.analytic_product = std::numbers::pi / std::cosh(std::sqrt(3.0) / 2.0 * std::numbers::pi);
    est.abs_difference = std::abs(est.truncated_product - est.analytic_product);
    est.truncated_ratio = 1.0 - est.truncated_product;
    est.analytic_ratio = 1.0 - est.analytic_product;
    return est;
}

}  // namespace lazymatch
