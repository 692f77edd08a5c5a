#include "scrolldiv/classes.hpp"

#include "scrolldiv/errors.hpp"

namespace scrolldiv {

const Int& WeilClass::d() const {
    if (regime != Regime::Cone)
        throw DomainError("RegimeMismatch", "class is not in the cone regime");
    return a;
}

Int pic_intersect(const Scroll& scroll, const std::vector<PicClass>& classes) {
    if (static_cast<int>(classes.size()) != scroll.r)
        throw DomainError("WrongArity",
                          "intersection product needs exactly r = " +
                              std::to_string(scroll.r) + " classes, got " +
                              std::to_string(classes.size()));
    Int prod_a = 1;
    for (const PicClass& c : classes) prod_a *= c.a;
    Int result = prod_a * scroll.f;
    for (size_t j = 0; j < classes.size(); ++j) {
        Int partial = classes[j].b;
        for (size_t i = 0; i < classes.size(); ++i)
            if (i != j) partial *= classes[i].a;
        result += partial;
    }
    return result;
}

PicClass canonical_class(const Scroll& scroll) {
    return {Int(-scroll.r), scroll.f - 2};
}

PicClass exceptional_class(const Scroll& scroll) {
    if (!scroll.is_cone())
        throw DomainError("NotACone", "exceptional divisor class requires a cone");
    return {1, -scroll.f};
}

WeilClass strict_image(const Scroll& scroll, const PicClass& cls) {
    if (!scroll.is_singular())
        throw DomainError("SmoothScroll", "strict image requires a singular scroll");
    if (scroll.is_cone()) return WeilClass::ruling(cls.a * scroll.f + cls.b);
    return WeilClass::pair(cls.a, cls.b);
}

}  // namespace scrolldiv
