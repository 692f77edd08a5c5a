#include "scrolldiv/arith.hpp"

#include <stdexcept>

namespace scrolldiv {

EuclidResult euclid_div(const Int& value, const Int& divisor) {
    if (divisor <= 0) throw std::invalid_argument("euclid_div: divisor must be positive");
    Int q = value / divisor;
    Int r = value % divisor;
    if (r < 0) {
        q -= 1;
        r += divisor;
    }
    return {q, r};
}

Int floor_div(const Int& value, const Int& divisor) {
    return euclid_div(value, divisor).quot;
}

Int ceil_div(const Int& value, const Int& divisor) {
    EuclidResult e = euclid_div(value, divisor);
    return e.rem == 0 ? e.quot : e.quot + 1;
}

Int rat_floor(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

Int rat_ceil(const Rat& q) {
    return ceil_div(numerator(q), denominator(q));
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < k) return 0;
    unsigned long steps;
    try {
        steps = k.convert_to<unsigned long>();
    } catch (const std::exception&) {
        throw std::overflow_error("binomial: k too large");
    }
    Int result = 1;
    for (unsigned long i = 1; i <= steps; ++i) {
        result *= n - Int(i) + 1;
        result /= Int(i);
    }
    return result;
}

}  // namespace scrolldiv
