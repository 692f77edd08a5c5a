#include "scrolldiv/oracle.hpp"

#include <functional>
#include <stdexcept>

#include "scrolldiv/errors.hpp"

namespace scrolldiv::oracle {

namespace {

constexpr int kEnumerationCap = 8;

/// Accumulates h^0 and h^1 contributions of every size-`size` multiset by
/// direct recursive enumeration.
void enumerate_multisets(const std::vector<Int>& degrees, int size, const Int& b,
                         Int& h0, Int& h1) {
    std::function<void(size_t, int, const Int&)> walk =
        [&](size_t start, int remaining, const Int& sigma) {
            if (remaining == 0) {
                Int fiber = b + sigma + 1;
                if (fiber > 0) h0 += fiber;
                if (fiber < 0) h1 -= fiber;
                return;
            }
            for (size_t i = start; i < degrees.size(); ++i)
                walk(i, remaining - 1, sigma + degrees[i]);
        };
    walk(0, size, 0);
}

int checked_size(const Int& a) {
    if (a > kEnumerationCap)
        throw DomainError("EnumerationTooLarge",
                          "reference enumeration is capped at multiset size 8");
    return a.convert_to<int>();
}

Int naive_chi(const Scroll& scroll, const Int& a, const Int& b) {
    CohomVector h = naive_cohomology(scroll, a, b);
    Int chi = 0;
    int sign = 1;
    for (const Int& v : h) {
        chi += sign * v;
        sign = -sign;
    }
    return chi;
}

}  // namespace

CohomVector naive_cohomology(const Scroll& scroll, const Int& a, const Int& b) {
    CohomVector h(scroll.r + 1, 0);
    if (a >= 0) {
        enumerate_multisets(scroll.degrees, checked_size(a), b, h[0], h[1]);
    } else if (a <= -scroll.r) {
        Int a_dual = -scroll.r - a;
        Int b_dual = scroll.f - 2 - b;
        enumerate_multisets(scroll.degrees, checked_size(a_dual), b_dual,
                            h[scroll.r], h[scroll.r - 1]);
    }
    return h;
}

std::vector<HilbertSample> hilbert_samples(const Scroll& scroll, const Int& d1, const Int& d2) {
    if (!scroll.is_cone())
        throw DomainError("NotACone", "Hilbert sampling requires a cone");
    if (d1 < 1 || d2 < 1)
        throw DomainError("NonEffective", "Hilbert sampling requires degrees >= 1");

    // Twisted ideal terms (A, B) with chi_Y(k) as the alternating sum
    // chi(k,0) - chi((k,0)-T1) - chi((k,0)-T2) + chi((k,0)-T12).
    auto ideal_term = [&](const Int& d) {
        Int k_dig = (d - 1) / scroll.f;
        Int h_dig = (d - 1) % scroll.f;
        return std::pair<Int, Int>{k_dig + 1, -(scroll.f - h_dig - 1)};
    };
    auto [a1, b1] = ideal_term(d1);
    auto [a2, b2] = ideal_term(d2);
    auto [a12, b12] = ideal_term(d1 + d2);

    std::vector<HilbertSample> samples;
    for (Int k = 0; k <= scroll.r; ++k) {
        Int chi = naive_chi(scroll, k, 0) - naive_chi(scroll, k - a1, -b1) -
                  naive_chi(scroll, k - a2, -b2) + naive_chi(scroll, k - a12, -b12);
        samples.push_back({k, chi});
    }
    return samples;
}

HilbertFit hilbert_degree_genus(const Scroll& scroll, const Int& d1, const Int& d2) {
    std::vector<HilbertSample> samples = hilbert_samples(scroll, d1, d2);
    std::vector<std::vector<Int>> table;
    table.emplace_back();
    for (const HilbertSample& s : samples) table.back().push_back(s.chi);
    while (table.back().size() > 1) {
        const std::vector<Int>& prev = table.back();
        std::vector<Int> next;
        for (size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        table.push_back(std::move(next));
    }
    for (const Int& v : table[scroll.r - 1])
        if (v != 0)
            throw std::logic_error("sampled Hilbert values do not fit a polynomial of the expected degree");
    HilbertFit fit;
    fit.chi0 = table[0][0];
    fit.degree = scroll.r >= 3 ? table[scroll.r - 2][0] : table[0][0];
    return fit;
}

}  // namespace scrolldiv::oracle
