#include "scrolldiv/divisors.hpp"

#include "scrolldiv/cohomology.hpp"
#include "scrolldiv/errors.hpp"

namespace scrolldiv {

namespace {

void require_singular(const Scroll& scroll, const char* op) {
    if (!scroll.is_singular())
        throw DomainError("SmoothScroll", std::string(op) + " requires a singular scroll");
}

void require_form(const Scroll& scroll, const SheafForm& s) {
    if (s.regime != scroll.regime)
        throw DomainError("RegimeMismatch", "sheaf form belongs to a different regime");
    if (scroll.is_cone() && (s.b < 0 || s.b >= scroll.f))
        throw DomainError("NotNormalForm", "cone sheaf form must have 0 <= b < f");
}

}  // namespace

bool is_reflexive(const Scroll& scroll, const Int& a, const Int& b) {
    require_singular(scroll, "reflexivity test");
    (void)a;
    if (scroll.is_cone()) return b < scroll.f;
    return true;
}

SheafForm sheaf_of_divisor(const Scroll& scroll, const WeilClass& cls) {
    if (cls.regime != scroll.regime)
        throw DomainError("RegimeMismatch", "class belongs to a different regime");
    if (scroll.is_cone()) {
        EuclidResult e = euclid_div(cls.d(), scroll.f);
        return {e.quot, e.rem, Regime::Cone};
    }
    return {cls.a, cls.b, Regime::HigherCodim};
}

SheafForm normalize_sheaf(const Scroll& scroll, const Int& a, const Int& b) {
    require_singular(scroll, "sheaf normalization");
    return sheaf_of_divisor(scroll, strict_image(scroll, {a, b}));
}

SheafForm div_group_op(const Scroll& scroll, const SheafForm& s1, const SheafForm& s2) {
    require_form(scroll, s1);
    require_form(scroll, s2);
    if (scroll.is_cone()) {
        EuclidResult e = euclid_div(s1.b + s2.b, scroll.f);
        return {s1.a + s2.a + e.quot, e.rem, Regime::Cone};
    }
    return {s1.a + s2.a, s1.b + s2.b, Regime::HigherCodim};
}

SheafForm div_dual(const Scroll& scroll, const SheafForm& s) {
    require_form(scroll, s);
    if (scroll.is_cone()) {
        EuclidResult e = euclid_div(-(s.a * scroll.f + s.b), scroll.f);
        return {e.quot, e.rem, Regime::Cone};
    }
    return {-s.a, -s.b, Regime::HigherCodim};
}

std::optional<bool> is_cartier(const Scroll& scroll, const WeilClass& cls) {
    require_singular(scroll, "Cartier test");
    if (cls.regime != scroll.regime)
        throw DomainError("RegimeMismatch", "class belongs to a different regime");
    if (scroll.is_cone()) return cls.d() % scroll.f == 0;
    if (cls.b == 0) return true;
    return std::nullopt;
}

Int dim_linear_system(const Scroll& scroll, const Int& d) {
    if (!scroll.is_cone())
        throw DomainError("NotACone", "linear system dimension requires a cone");
    if (d < 1)
        throw DomainError("NonEffective", "linear system dimension requires d >= 1");
    SheafForm s = sheaf_of_divisor(scroll, WeilClass::ruling(d));
    return cohomology_x(scroll, s.a, s.b)[0] - 1;
}

Int dim_linear_system_closed(const Scroll& scroll, const Int& d) {
    if (!scroll.is_cone())
        throw DomainError("NotACone", "linear system dimension requires a cone");
    if (d < 1)
        throw DomainError("NonEffective", "linear system dimension requires d >= 1");
    EuclidResult e = euclid_div(d - 1, scroll.f);
    if (e.rem == scroll.f - 1)
        return scroll.f * binomial(e.quot + scroll.r, scroll.r);
    return scroll.f * binomial(e.quot + scroll.r - 1, scroll.r) +
           (e.rem + 2) * binomial(e.quot + scroll.r - 1, scroll.r - 1) - 1;
}

}  // namespace scrolldiv
