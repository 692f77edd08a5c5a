#include "scrolldiv/transform.hpp"

#include "scrolldiv/errors.hpp"

namespace scrolldiv {

namespace {

void require_cone(const Scroll& scroll, const char* op) {
    if (!scroll.is_cone())
        throw DomainError("NotACone", std::string(op) + " requires a cone");
}

}  // namespace

TransformData transform_data(const Scroll& scroll, const Int& d) {
    require_cone(scroll, "total transform");
    TransformData t;
    t.d = d;
    EuclidResult e = euclid_div(d - 1, scroll.f);
    t.k = e.quot;
    t.h = e.rem;
    t.q_ceil = t.k + 1 - floor_div(d, scroll.f);
    t.epsilon = Rat(scroll.f - t.h - 1, scroll.f);
    if (d >= 0) {
        t.total = {t.k + 1, -(scroll.f - t.h - 1)};
    } else {
        TransformData pos = transform_data(scroll, -d);
        t.total = -pos.total;
    }
    return t;
}

PicClass integral_total_transform(const Scroll& scroll, const Int& d) {
    return transform_data(scroll, d).total;
}

std::pair<Rat, Rat> rational_total_transform(const Scroll& scroll, const Int& d) {
    require_cone(scroll, "total transform");
    return {Rat(d, scroll.f), Rat(0)};
}

Rat epsilon(const Scroll& scroll, const Int& d) {
    require_cone(scroll, "vertex correction");
    if (d < 0)
        throw DomainError("NegativeDegree", "vertex correction requires d >= 0");
    return transform_data(scroll, d).epsilon;
}

Int sum_defect(const Scroll& scroll, const Int& d1, const Int& d2) {
    return rat_floor(epsilon(scroll, d1) + epsilon(scroll, d2));
}

Int pushforward_latitude(const Scroll& scroll, const Int& d, const Int& vertex_mult) {
    require_cone(scroll, "pushforward latitude");
    if (d < 0)
        throw DomainError("NegativeDegree", "pushforward latitude requires d >= 0");
    if (vertex_mult < 0 || (vertex_mult - d) % scroll.f != 0)
        throw DomainError("InvalidVertexMultiplicity",
                          "vertex multiplicity must be >= 0 and congruent to d modulo f");
    return ceil_div(vertex_mult, scroll.f);
}

}  // namespace scrolldiv
