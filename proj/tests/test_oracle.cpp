#include "doctest.h"
#include "helpers.hpp"
#include "scrolldiv/oracle.hpp"

using namespace scrolldiv;
using testutil::error_code_of;

TEST_CASE("reference enumeration matches the fast cohomology path") {
    for (const auto& degrees :
         {std::vector<Int>{0, 2}, {1, 2}, {0, 0, 3}, {0, 1, 2}, {0, 0, 1, 2}}) {
        Scroll s = classify(degrees);
        for (long a = -10; a <= 6; ++a)
            for (long b = -7; b <= 7; ++b)
                CHECK_EQ(oracle::naive_cohomology(s, a, b), cohomology_tilde(s, a, b));
    }
}

TEST_CASE("reference enumeration is capped") {
    Scroll s = classify({0, 0, 3});
    CHECK_EQ(error_code_of([&] { oracle::naive_cohomology(s, 9, 0); }),
             "EnumerationTooLarge");
    CHECK_EQ(error_code_of([&] { oracle::naive_cohomology(s, -12, 0); }),
             "EnumerationTooLarge");
    CHECK_EQ(oracle::naive_cohomology(s, -11, 123), cohomology_tilde(s, -11, 123));
}

TEST_CASE("Hilbert samples of the twisted ideal") {
    Scroll s = classify({0, 0, 3});
    auto samples = oracle::hilbert_samples(s, 4, 5);
    REQUIRE_EQ(samples.size(), 4);
    for (const auto& sample : samples)
        CHECK_EQ(sample.chi, 7 * sample.k - 1);
}

TEST_CASE("Hilbert fit recovers degree and chi0") {
    oracle::HilbertFit cubic = oracle::hilbert_degree_genus(classify({0, 0, 3}), 4, 5);
    CHECK_EQ(cubic.degree, 7);
    CHECK_EQ(cubic.chi0, -1);

    oracle::HilbertFit quadric3 = oracle::hilbert_degree_genus(classify({0, 0, 2}), 3, 3);
    CHECK_EQ(quadric3.degree, 5);
    CHECK_EQ(quadric3.chi0, 0);

    oracle::HilbertFit rulings = oracle::hilbert_degree_genus(classify({0, 2}), 1, 1);
    CHECK_EQ(rulings.degree, 1);
    CHECK_EQ(rulings.chi0, 1);

    CHECK_EQ(error_code_of([] { oracle::hilbert_degree_genus(classify({0, 2}), 0, 1); }),
             "NonEffective");
    CHECK_EQ(error_code_of([] { oracle::hilbert_degree_genus(classify({1, 2}), 1, 1); }),
             "NotACone");
}
