#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "scrolldiv/cohomology.hpp"

using namespace scrolldiv;
using testutil::error_code_of;

namespace {

/// Signed extension of the binomial coefficient: the degree-k polynomial
/// n(n-1)...(n-k+1)/k! evaluated at any integer n. Independent of the
/// library's vanishing-convention binomial.
Int signed_binomial(Int n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

std::vector<std::vector<Int>> sample_scrolls() {
    return {{0, 2}, {1, 2}, {0, 3}, {0, 0, 3}, {0, 1, 2}, {1, 1, 2}, {0, 0, 1, 2}, {0, 0, 0, 4}};
}

}  // namespace

TEST_CASE("cohomology of line bundles on the resolution") {
    Scroll s = classify({0, 0, 3});
    CHECK_EQ(cohomology_tilde(s, 1, 0), CohomVector{6, 0, 0, 0});
    CHECK_EQ(cohomology_tilde(s, 1, -2), CohomVector{2, 2, 0, 0});
    CHECK_EQ(cohomology_tilde(s, -3, 0), CohomVector{0, 0, 0, 2});
    CHECK_EQ(cohomology_tilde(s, -1, 5), CohomVector{0, 0, 0, 0});
    CHECK_EQ(cohomology_tilde(s, -2, -7), CohomVector{0, 0, 0, 0});
    CHECK_EQ(cohomology_tilde(s, 0, -1), CohomVector{0, 0, 0, 0});
    CHECK_EQ(cohomology_tilde(s, 0, 2), CohomVector{3, 0, 0, 0});

    Scroll quadric = classify({0, 2});
    CHECK_EQ(cohomology_tilde(quadric, 2, -1), CohomVector{6, 0, 0});
    CHECK_EQ(cohomology_tilde(quadric, 0, -2), CohomVector{0, 1, 0});
}

TEST_CASE("closed form h^0 matches the decomposition") {
    Scroll s = classify({0, 0, 3});
    CHECK_EQ(h0_closed(s, 1, 0), 6);
    for (const auto& degrees : sample_scrolls()) {
        Scroll sc = classify(degrees);
        for (long a = 0; a <= 5; ++a)
            for (long b = -1; b <= 8; ++b)
                CHECK_EQ(h0_closed(sc, a, b), cohomology_tilde(sc, a, b)[0]);
    }
    CHECK_EQ(error_code_of([&] { h0_closed(s, -1, 0); }), "OutOfValidityRegion");
    CHECK_EQ(error_code_of([&] { h0_closed(s, 2, -2); }), "OutOfValidityRegion");
}

TEST_CASE("vanishing strip and middle cohomology") {
    for (const auto& degrees : sample_scrolls()) {
        Scroll s = classify(degrees);
        for (long a = -s.r + 1; a <= -1; ++a)
            for (long b = -6; b <= 6; ++b)
                CHECK_EQ(cohomology_tilde(s, a, b), CohomVector(s.r + 1, 0));
        for (long a = -8; a <= 8; ++a)
            for (long b = -6; b <= 6; ++b) {
                CohomVector h = cohomology_tilde(s, a, b);
                for (int i = 2; i <= s.r - 2; ++i) CHECK_EQ(h[i], 0);
            }
    }
}

TEST_CASE("duality involution pins the top range") {
    for (const auto& degrees : sample_scrolls()) {
        Scroll s = classify(degrees);
        for (long a = -9; a <= 9; ++a) {
            for (long b = -7; b <= 7; ++b) {
                CohomVector lhs = cohomology_tilde(s, a, b);
                CohomVector rhs = cohomology_tilde(s, -s.r - a, s.f - 2 - b);
                for (int i = 0; i <= s.r; ++i) CHECK_EQ(lhs[i], rhs[s.r - i]);
            }
        }
    }
}

TEST_CASE("euler characteristic is the signed-binomial polynomial everywhere") {
    for (const auto& degrees : sample_scrolls()) {
        Scroll s = classify(degrees);
        for (long a = -12; a <= 12; ++a) {
            for (long b = -8; b <= 8; ++b) {
                Int expected = s.f * signed_binomial(Int(a) + s.r - 1, s.r) +
                               (Int(b) + 1) * signed_binomial(Int(a) + s.r - 1, s.r - 1);
                CHECK_EQ(chi_tilde(s, a, b), expected);
            }
        }
    }
}

TEST_CASE("cohomology of divisorial sheaves on the scroll itself") {
    Scroll quadric = classify({0, 2});
    CHECK_EQ(cohomology_x(quadric, 2, -1), CohomVector{6, 0, 0});
    Scroll cubic = classify({0, 0, 3});
    CHECK_EQ(cohomology_x(cubic, 1, 1), CohomVector{9, 0, 0, 0});
    CHECK_EQ(error_code_of([&] { cohomology_x(classify({1, 2}), 1, 0); }), "SmoothScroll");
    CHECK_EQ(error_code_of([&] { cohomology_x(cubic, 0, -2); }), "OutOfValidityRegion");
}
