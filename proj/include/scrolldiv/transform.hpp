#pragma once

#include <utility>

#include "scrolldiv/classes.hpp"

namespace scrolldiv {

/// Total-transform data of the multiple d of a ruling plane on a cone.
/// k and h are the Euclidean digits of d - 1 = k*f + h with 0 <= h < f
/// (valid for every integer d); total is the integral total transform;
/// epsilon = (f - h - 1)/f is the fractional vertex correction;
/// q_ceil = k + 1 - floor(d/f).
struct TransformData {
    Int d;
    Int k;
    Int h;
    Int q_ceil;
    Rat epsilon;
    PicClass total;
};

/// Errors: NotACone.
TransformData transform_data(const Scroll& scroll, const Int& d);

/// Integral total transform on the resolution: (k+1, -(f-h-1)) for d >= 0
/// where d - 1 = k*f + h, extended to negative d by (-D)* = -(D*).
/// Errors: NotACone.
PicClass integral_total_transform(const Scroll& scroll, const Int& d);

/// Total transform as a rational class: (d/f, 0). Errors: NotACone.
std::pair<Rat, Rat> rational_total_transform(const Scroll& scroll, const Int& d);

/// Fractional correction (f - h - 1)/f in [0, 1). Errors: NotACone,
/// NegativeDegree.
Rat epsilon(const Scroll& scroll, const Int& d);

/// Defect floor(epsilon(d1) + epsilon(d2)) in {0, 1}: the total transform of
/// a sum is (D1+D2)* = D1* + D2* - defect * E. Errors: NotACone,
/// NegativeDegree.
Int sum_defect(const Scroll& scroll, const Int& d1, const Int& d2);

/// Number of exceptional multiples ceil(b/f) separating the total transform
/// from the proper transform of an effective divisor of class d*R with
/// vertex multiplicity b. Errors: NotACone, NegativeDegree,
/// InvalidVertexMultiplicity.
Int pushforward_latitude(const Scroll& scroll, const Int& d, const Int& vertex_mult);

}  // namespace scrolldiv
