#include "scrolldiv/intersect.hpp"

#include <stdexcept>

#include "scrolldiv/cohomology.hpp"
#include "scrolldiv/errors.hpp"

namespace scrolldiv {

namespace {

void require_cone(const Scroll& scroll, const char* op) {
    if (!scroll.is_cone())
        throw DomainError("NotACone", std::string(op) + " requires a cone");
}

void require_effective(const Int& d, const char* op) {
    if (d < 1)
        throw DomainError("NonEffective", std::string(op) + " requires degree >= 1");
}

void check_arity(const Scroll& scroll, size_t count, const char* op) {
    if (count == 0)
        throw DomainError("EmptyClassList", std::string(op) + " needs at least one class");
    if (count > static_cast<size_t>(scroll.r - 1))
        throw DomainError("TooManyFactors",
                          std::string(op) + " accepts at most r - 1 classes");
}

Int defect_correction(const Scroll& scroll, const TransformData& t1, const TransformData& t2) {
    if (rat_floor(t1.epsilon + t2.epsilon) == 0) return 0;
    return scroll.f - t1.h - t2.h - 1;
}

}  // namespace

Int ci_degree_high_codim(const Scroll& scroll, const std::vector<WeilClass>& classes) {
    if (scroll.regime != Regime::HigherCodim)
        throw DomainError("NotHigherCodim",
                          "partial intersection degree requires a higher-codimension vertex");
    check_arity(scroll, classes.size(), "partial intersection degree");
    std::vector<PicClass> factors;
    factors.reserve(scroll.r);
    for (const WeilClass& cls : classes) {
        if (cls.regime != Regime::HigherCodim)
            throw DomainError("RegimeMismatch", "class belongs to a different regime");
        if (cohomology_tilde(scroll, cls.a, cls.b)[0] == 0)
            throw DomainError("NonEffectiveClass",
                              "every intersection factor must be an effective class");
        factors.push_back({cls.a, cls.b});
    }
    while (factors.size() < static_cast<size_t>(scroll.r))
        factors.push_back(hyperplane_class());
    return pic_intersect(scroll, factors);
}

bool acm_koszul(const Scroll& scroll, const std::vector<std::pair<Int, Int>>& classes) {
    if (scroll.regime != Regime::HigherCodim)
        throw DomainError("NotHigherCodim",
                          "Koszul ACM criterion requires a higher-codimension vertex");
    check_arity(scroll, classes.size(), "Koszul ACM criterion");
    Int total = 0;
    for (const auto& [a, b] : classes) {
        (void)a;
        if (b < 0)
            throw DomainError("NegativeTwist", "fiber twists must be >= 0");
        total += b;
    }
    return total < scroll.f;
}

Int cone_ci_degree(const Scroll& scroll, const Int& d1, const Int& d2) {
    require_cone(scroll, "intersection degree");
    require_effective(d1, "intersection degree");
    require_effective(d2, "intersection degree");
    TransformData t1 = transform_data(scroll, d1);
    TransformData t2 = transform_data(scroll, d2);
    std::vector<PicClass> factors{t1.total, t2.total};
    factors.resize(scroll.r, hyperplane_class());
    return pic_intersect(scroll, factors) + defect_correction(scroll, t1, t2);
}

Int vertex_multiplicity(const Scroll& scroll, const EffectiveDivisorData& e1,
                        const EffectiveDivisorData& e2) {
    require_cone(scroll, "vertex multiplicity");
    require_effective(e1.d, "vertex multiplicity");
    require_effective(e2.d, "vertex multiplicity");
    for (const EffectiveDivisorData* e : {&e1, &e2}) {
        if (!e->vertex_mult || *e->vertex_mult < 0 ||
            (*e->vertex_mult - e->d) % scroll.f != 0)
            throw DomainError("InvalidVertexMultiplicity",
                              "vertex multiplicity must be present, >= 0 and congruent to d modulo f");
    }
    TransformData t1 = transform_data(scroll, e1.d);
    TransformData t2 = transform_data(scroll, e2.d);
    Rat m = Rat(*e1.vertex_mult * *e2.vertex_mult, scroll.f) -
            scroll.f * t1.epsilon * t2.epsilon + defect_correction(scroll, t1, t2);
    if (denominator(m) != 1)
        throw std::logic_error("vertex multiplicity is not integral");
    return numerator(m);
}

Rat mumford_intersection(const Scroll& scroll, const std::vector<Int>& degrees) {
    require_cone(scroll, "intersection pairing");
    if (static_cast<int>(degrees.size()) != scroll.r)
        throw DomainError("WrongArity",
                          "intersection pairing needs exactly r = " +
                              std::to_string(scroll.r) + " degrees");
    Int num = 1;
    for (const Int& d : degrees) num *= d;
    Int den = 1;
    for (int i = 0; i < scroll.r - 1; ++i) den *= scroll.f;
    return Rat(num, den);
}

Rat mumford_vertex_multiplicity(const Scroll& scroll, const Int& b1, const Int& b2) {
    require_cone(scroll, "vertex pairing");
    if (b1 < 0 || b2 < 0)
        throw DomainError("InvalidVertexMultiplicity", "vertex multiplicities must be >= 0");
    return Rat(b1 * b2, scroll.f);
}

Int genus_divisor(const Scroll& scroll, const Int& d) {
    require_cone(scroll, "divisor genus");
    require_effective(d, "divisor genus");
    PicClass t = integral_total_transform(scroll, d);
    Int chi_d = chi_tilde(scroll, 0, 0) - chi_tilde(scroll, -t.a, -t.b);
    Int genus = chi_d - 1;
    return scroll.r % 2 == 0 ? -genus : genus;
}

Int castelnuovo_genus_bound(const Int& n, const Int& d) {
    if (n < 3)
        throw DomainError("AmbientTooSmall", "Castelnuovo bound requires n >= 3");
    if (d <= n - 1)
        throw DomainError("DegreeTooSmall", "Castelnuovo bound requires d > n - 1");
    EuclidResult e = euclid_div(d - 1, n - 1);
    return binomial(e.quot, 2) * (n - 1) + e.quot * e.rem;
}

ResolutionTriple intersection_resolution(const Scroll& scroll, const Int& d1, const Int& d2) {
    require_cone(scroll, "intersection resolution");
    require_effective(d1, "intersection resolution");
    require_effective(d2, "intersection resolution");
    return {-integral_total_transform(scroll, d1 + d2),
            -integral_total_transform(scroll, d1),
            -integral_total_transform(scroll, d2)};
}

ConeCiInvariants cone_ci_invariants(const Scroll& scroll, const Int& d1, const Int& d2) {
    ResolutionTriple res = intersection_resolution(scroll, d1, d2);
    ConeCiInvariants out;
    out.degree = cone_ci_degree(scroll, d1, d2);
    out.chi0 = chi_tilde(scroll, 0, 0) - chi_tilde(scroll, res.mid1.a, res.mid1.b) -
               chi_tilde(scroll, res.mid2.a, res.mid2.b) +
               chi_tilde(scroll, res.left.a, res.left.b);
    if (scroll.r >= 3) {
        Int genus = out.chi0 - 1;
        out.genus = scroll.r % 2 == 0 ? genus : -genus;
    }
    return out;
}

Int intersection_genus(const Scroll& scroll, const Int& d1, const Int& d2) {
    ConeCiInvariants inv = cone_ci_invariants(scroll, d1, d2);
    if (!inv.genus)
        throw DomainError("DimensionTooSmall",
                          "the intersection on a surface cone is zero-dimensional");
    return *inv.genus;
}

CiClosedForm ci_closed_form(const Scroll& scroll, const Int& d1, const Int& d2) {
    require_cone(scroll, "closed-form invariants");
    if (scroll.r < 3)
        throw DomainError("DimensionTooSmall", "closed-form invariants require r >= 3");
    if (d1 <= scroll.f || d2 <= scroll.f)
        throw DomainError("Degenerate", "closed-form invariants require d1, d2 > f");
    struct Term {
        int sign;
        Int alpha;
        Int beta;
    };
    auto make_term = [&](int sign, const Int& d) {
        Int alpha = ceil_div(d, scroll.f);
        return Term{sign, alpha, alpha * scroll.f - d};
    };
    Term terms[] = {make_term(-1, d2), make_term(1, d1 + d2), make_term(-1, d1)};
    CiClosedForm out{0, 0};
    for (const Term& t : terms) {
        Int weight = scroll.f - 1 - t.beta;
        out.genus += t.sign * (binomial(t.alpha - 1, scroll.r) +
                               weight * binomial(t.alpha - 1, scroll.r - 1));
        out.degree += t.sign * (binomial(t.alpha - 1, scroll.r - 1) +
                                weight * binomial(t.alpha - 1, scroll.r - 2));
    }
    return out;
}

namespace {

bool vanishes_on_window(const Scroll& scroll, const PicClass& twist_of, int i_lo, int i_hi) {
    if (i_lo > i_hi) return true;
    Int window = 2 * scroll.f + 5;
    for (Int k = -window; k <= window; ++k) {
        CohomVector h = cohomology_tilde(scroll, k + twist_of.a, twist_of.b);
        for (int i = i_lo; i <= i_hi; ++i)
            if (h[i] != 0) return false;
    }
    return true;
}

}  // namespace

bool is_acm_cone(const Scroll& scroll, const Int& d) {
    require_cone(scroll, "ACM test");
    require_effective(d, "ACM test");
    PicClass t = integral_total_transform(scroll, d);
    return vanishes_on_window(scroll, -t, 1, scroll.r - 1);
}

bool is_acm_cone(const Scroll& scroll, const Int& d1, const Int& d2) {
    require_cone(scroll, "ACM test");
    ResolutionTriple res = intersection_resolution(scroll, d1, d2);
    return vanishes_on_window(scroll, res.mid1, 1, scroll.r - 2) &&
           vanishes_on_window(scroll, res.mid2, 1, scroll.r - 2) &&
           vanishes_on_window(scroll, res.left, 2, scroll.r - 1);
}

}  // namespace scrolldiv
