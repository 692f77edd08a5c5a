#include "scrolldiv/cohomology.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "scrolldiv/errors.hpp"

namespace scrolldiv {

namespace {

/// Multiplicity of each attainable sum of a size-`size` multiset of the
/// splitting-type entries, folded one entry at a time.
std::map<Int, Int> multiset_sum_counts(const std::vector<Int>& degrees, long size) {
    std::vector<std::map<Int, Int>> by_count(size + 1);
    by_count[0][0] = 1;
    for (const Int& deg : degrees) {
        for (long k = 1; k <= size; ++k) {
            for (const auto& [sigma, mult] : by_count[k - 1]) {
                by_count[k][sigma + deg] += mult;
            }
        }
    }
    return by_count[size];
}

CohomVector direct_region(const Scroll& scroll, const Int& a, const Int& b) {
    long size;
    try {
        size = a.convert_to<long>();
    } catch (const std::exception&) {
        throw std::overflow_error("cohomology: twist too large");
    }
    CohomVector h(scroll.r + 1, 0);
    for (const auto& [sigma, mult] : multiset_sum_counts(scroll.degrees, size)) {
        Int fiber = b + sigma + 1;
        if (fiber > 0)
            h[0] += mult * fiber;
        else if (fiber < 0)
            h[1] += mult * (-fiber);
    }
    return h;
}

}  // namespace

CohomVector cohomology_tilde(const Scroll& scroll, const Int& a, const Int& b) {
    if (a >= 0) return direct_region(scroll, a, b);
    if (a > -scroll.r) return CohomVector(scroll.r + 1, 0);
    CohomVector dual = direct_region(scroll, -scroll.r - a, scroll.f - 2 - b);
    return CohomVector(dual.rbegin(), dual.rend());
}

Int h0_closed(const Scroll& scroll, const Int& a, const Int& b) {
    if (a < 0 || b < -1)
        throw DomainError("OutOfValidityRegion",
                          "closed form for h^0 requires a >= 0 and b >= -1");
    Int top = a + scroll.r - 1;
    return scroll.f * binomial(top, scroll.r) + (b + 1) * binomial(top, scroll.r - 1);
}

Int chi_tilde(const Scroll& scroll, const Int& a, const Int& b) {
    CohomVector h = cohomology_tilde(scroll, a, b);
    Int chi = 0;
    int sign = 1;
    for (const Int& v : h) {
        chi += sign * v;
        sign = -sign;
    }
    return chi;
}

CohomVector cohomology_x(const Scroll& scroll, const Int& a, const Int& b) {
    if (!scroll.is_singular())
        throw DomainError("SmoothScroll",
                          "cohomology on X distinguishes a singular scroll from its resolution");
    if (b < -1)
        throw DomainError("OutOfValidityRegion",
                          "cohomology on X is computed only for b >= -1");
    return cohomology_tilde(scroll, a, b);
}

}  // namespace scrolldiv
