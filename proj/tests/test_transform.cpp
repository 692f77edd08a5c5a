#include "doctest.h"
#include "helpers.hpp"
#include "scrolldiv/transform.hpp"

using namespace scrolldiv;
using testutil::error_code_of;

TEST_CASE("integral total transform on the cubic cone") {
    Scroll s = classify({0, 0, 3});
    CHECK_EQ(integral_total_transform(s, 4), PicClass{2, -2});
    CHECK_EQ(integral_total_transform(s, 5), PicClass{2, -1});
    CHECK_EQ(integral_total_transform(s, 9), PicClass{3, 0});
    CHECK_EQ(integral_total_transform(s, 3), PicClass{1, 0});
    CHECK_EQ(integral_total_transform(s, 1), PicClass{1, -2});
    CHECK_EQ(integral_total_transform(s, 0), PicClass{0, 0});
    CHECK_EQ(integral_total_transform(s, -4), PicClass{-2, 2});
    CHECK_EQ(error_code_of([] { integral_total_transform(classify({1, 2}), 1); }), "NotACone");
    CHECK_EQ(error_code_of([] { integral_total_transform(classify({0, 1, 2}), 1); }), "NotACone");
}

TEST_CASE("transform data digits") {
    Scroll s = classify({0, 0, 3});
    TransformData t = transform_data(s, 4);
    CHECK_EQ(t.k, 1);
    CHECK_EQ(t.h, 0);
    CHECK_EQ(t.q_ceil, 1);
    CHECK_EQ(t.epsilon, Rat(2, 3));
    for (long d = -15; d <= 15; ++d) {
        TransformData td = transform_data(s, d);
        CHECK_EQ(td.k * s.f + td.h, d - 1);
        CHECK_GE(td.h, 0);
        CHECK_LT(td.h, s.f);
        CHECK_EQ(td.q_ceil, td.k + 1 - floor_div(d, s.f));
    }
}

TEST_CASE("rational transform and round-up law") {
    Scroll s = classify({0, 0, 3});
    auto [qa, qb] = rational_total_transform(s, 4);
    CHECK_EQ(qa, Rat(4, 3));
    CHECK_EQ(qb, 0);
    PicClass e = exceptional_class(s);
    for (long d = 0; d <= 20; ++d) {
        PicClass t = integral_total_transform(s, d);
        auto [ra, rb] = rational_total_transform(s, d);
        Rat eps = epsilon(s, d);
        CHECK_EQ(Rat(t.a) - ra, eps * e.a);
        CHECK_EQ(Rat(t.b) - rb, eps * e.b);
    }
}

TEST_CASE("epsilon values and bounds") {
    Scroll s = classify({0, 0, 3});
    CHECK_EQ(epsilon(s, 4), Rat(2, 3));
    CHECK_EQ(epsilon(s, 5), Rat(1, 3));
    CHECK_EQ(epsilon(s, 3), 0);
    CHECK_EQ(epsilon(s, 1), Rat(2, 3));
    CHECK_EQ(epsilon(s, 0), 0);
    for (long d = 0; d <= 24; ++d) {
        Rat eps = epsilon(s, d);
        CHECK_GE(eps, 0);
        CHECK_LT(eps, 1);
    }
    CHECK_EQ(error_code_of([&] { epsilon(s, -1); }), "NegativeDegree");
}

TEST_CASE("sum rule for total transforms") {
    Scroll cubic = classify({0, 0, 3});
    CHECK_EQ(sum_defect(cubic, 4, 5), 1);
    CHECK_EQ(sum_defect(cubic, 3, 5), 0);
    for (const auto& degrees : {std::vector<Int>{0, 2}, {0, 0, 3}, {0, 0, 0, 5}}) {
        Scroll s = classify(degrees);
        PicClass e = exceptional_class(s);
        long fmax = s.f.convert_to<long>() * 4;
        for (long d1 = 0; d1 <= fmax; ++d1) {
            for (long d2 = 0; d2 <= fmax; ++d2) {
                Int defect = sum_defect(s, d1, d2);
                CHECK((defect == 0 || defect == 1));
                PicClass lhs = integral_total_transform(s, Int(d1) + d2);
                PicClass rhs = integral_total_transform(s, d1) +
                               integral_total_transform(s, d2) -
                               PicClass{defect * e.a, defect * e.b};
                CHECK_EQ(lhs, rhs);
            }
        }
    }
}

TEST_CASE("pushforward latitude counts exceptional multiples") {
    Scroll s = classify({0, 0, 3});
    CHECK_EQ(pushforward_latitude(s, 4, 1), 1);
    CHECK_EQ(pushforward_latitude(s, 4, 4), 2);
    CHECK_EQ(pushforward_latitude(s, 4, 7), 3);
    CHECK_EQ(pushforward_latitude(s, 3, 0), 0);
    CHECK_EQ(pushforward_latitude(s, 3, 3), 1);
    CHECK_EQ(error_code_of([&] { pushforward_latitude(s, 4, 0); }),
             "InvalidVertexMultiplicity");
    CHECK_EQ(error_code_of([&] { pushforward_latitude(s, 4, -2); }),
             "InvalidVertexMultiplicity");
    CHECK_EQ(error_code_of([&] { pushforward_latitude(s, -3, 0); }), "NegativeDegree");
}
