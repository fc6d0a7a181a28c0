#include "lazymatch/rational.hpp"

namespace lazymatch {

BigInt rational_floor(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);  // always positive in canonical form
    BigInt q = num / den;               // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt rational_ceil(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    BigInt q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace lazymatch
