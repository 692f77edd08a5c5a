#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scrolldiv/classes.hpp"
#include "scrolldiv/transform.hpp"

namespace scrolldiv {

/// An effective multiple of a ruling plane on a cone together with its
/// multiplicity at the vertex. vertex_mult, when present, must be >= 0 and
/// congruent to d modulo f.
struct EffectiveDivisorData {
    Int d;
    std::optional<Int> vertex_mult;
};

/// Twisted ideal resolution of the intersection of two effective multiples
/// of ruling planes on a cone:
/// 0 -> O(left) -> O(mid1) (+) O(mid2) -> I -> 0 with mid_i = -(D_i)* and
/// left = -(D1 + D2)* = mid1 + mid2 + defect * E.
struct ResolutionTriple {
    PicClass left;
    PicClass mid1;
    PicClass mid2;
};

/// Numerical invariants of the intersection scheme of two effective
/// multiples of ruling planes on a cone. genus is absent when r = 2 (the
/// scheme is zero-dimensional).
struct ConeCiInvariants {
    Int degree;
    std::optional<Int> genus;
    Int chi0;
};

/// Alternating-ceiling closed form for degree and genus of the same
/// intersection. The genus agrees with the resolution-based value; the
/// degree is a documented cross-check that disagrees with the authoritative
/// resolution-based degree (e.g. 4 vs 7 on (0,0,3) with d=4, d2=5) and must
/// not be preferred.
struct CiClosedForm {
    Int degree;
    Int genus;
};

/// Intersection degree of l <= r-1 effective classes on a HigherCodim
/// scroll, padded with hyperplanes to a full product on the resolution.
/// Errors: NotHigherCodim, TooManyFactors, EmptyClassList,
/// NonEffectiveClass, RegimeMismatch.
Int ci_degree_high_codim(const Scroll& scroll, const std::vector<WeilClass>& classes);

/// Arithmetic Cohen-Macaulayness of the scheme cut out on a HigherCodim
/// scroll by classes a_i*H - b_i*R with b_i >= 0: holds exactly when
/// sum(b_i) < f. Errors: NotHigherCodim, NegativeTwist, TooManyFactors,
/// EmptyClassList.
bool acm_koszul(const Scroll& scroll, const std::vector<std::pair<Int, Int>>& classes);

/// Degree of the intersection scheme of effective multiples d1, d2 of
/// ruling planes on a cone: D1* . D2* . H^(r-2) plus the vertex correction
/// f - h1 - h2 - 1 when the epsilon defect is 1. Errors: NotACone,
/// NonEffective.
Int cone_ci_degree(const Scroll& scroll, const Int& d1, const Int& d2);

/// Multiplicity of the intersection scheme at the vertex, from the vertex
/// multiplicities b_i of the two divisors:
/// b1*b2/f - f*eps1*eps2 (+ the same defect correction); always a
/// nonnegative integer. Errors: NotACone, NonEffective,
/// InvalidVertexMultiplicity.
Int vertex_multiplicity(const Scroll& scroll, const EffectiveDivisorData& e1,
                        const EffectiveDivisorData& e2);

/// Rational intersection pairing of r multiples of ruling planes on a cone:
/// prod(d_i) / f^(r-1). Errors: NotACone, WrongArity.
Rat mumford_intersection(const Scroll& scroll, const std::vector<Int>& degrees);

/// Rational vertex pairing b1*b2/f of two vertex multiplicities.
/// Errors: NotACone, InvalidVertexMultiplicity.
Rat mumford_vertex_multiplicity(const Scroll& scroll, const Int& b1, const Int& b2);

/// Arithmetic genus of an effective multiple of a ruling plane on a cone:
/// (-1)^(r-1) * (chi(O_D) - 1) with chi(O_D) = chi(O) - chi(-D*).
/// Errors: NotACone, NonEffective.
Int genus_divisor(const Scroll& scroll, const Int& d);

/// Castelnuovo bound for the genus of a nondegenerate curve of degree d in
/// P^n: C(m,2)(n-1) + m*delta with d - 1 = m(n-1) + delta,
/// 0 <= delta <= n-2. Errors: AmbientTooSmall, DegreeTooSmall.
Int castelnuovo_genus_bound(const Int& n, const Int& d);

/// Errors: NotACone, NonEffective.
ResolutionTriple intersection_resolution(const Scroll& scroll, const Int& d1, const Int& d2);

/// Degree, genus (r >= 3 only) and chi(O) of the intersection scheme, via
/// the resolution and resolution cohomology. Errors: NotACone,
/// NonEffective.
ConeCiInvariants cone_ci_invariants(const Scroll& scroll, const Int& d1, const Int& d2);

/// Genus of the intersection scheme; defined only when it is a curve or
/// higher-dimensional. Errors: NotACone, NonEffective, DimensionTooSmall.
Int intersection_genus(const Scroll& scroll, const Int& d1, const Int& d2);

/// Errors: NotACone, DimensionTooSmall, Degenerate (requires d1, d2 > f).
CiClosedForm ci_closed_form(const Scroll& scroll, const Int& d1, const Int& d2);

/// Arithmetic Cohen-Macaulayness of an effective multiple of a ruling plane
/// on a cone, verified by middle ideal-cohomology vanishing over the twist
/// window |k| <= 2f + 5. Errors: NotACone, NonEffective.
bool is_acm_cone(const Scroll& scroll, const Int& d);

/// Same check for the intersection scheme of two such divisors, through its
/// resolution. Errors: NotACone, NonEffective.
bool is_acm_cone(const Scroll& scroll, const Int& d1, const Int& d2);

}  // namespace scrolldiv
