#include "lazymatch/solution.hpp"

#include <numeric>

namespace lazymatch {

long long AdversarySolution::sum() const {
    return std::accumulate(x.begin(), x.end(), 0LL);
}

bool AdversarySolution::valid() const { return validate_solution(n, alpha, x); }

bool validate_solution(long long n, long long alpha, std::span<const long long> x) {
    if (x.size() < 2 || alpha < 1 || n < 0) return false;
    using Wide = __int128;
    if (Wide(1 + alpha) * x[0] > n) return false;
    Wide prefix = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] > n) return false;
        if (i >= 2 && x[i] > x[i - 1]) return false;
        prefix += x[i];
        if (prefix * (1 + x[i]) > Wide(n) - Wide(i)) return false;
    }
    return prefix >= 0;
}

}  // namespace lazymatch
