#pragma once

#include <vector>

#include "scrolldiv/arith.hpp"
#include "scrolldiv/scroll.hpp"

namespace scrolldiv {

/// Divisor class a*H + b*R on the resolution, where H is the hyperplane
/// class and R the fiber class of the ruling.
struct PicClass {
    Int a;
    Int b;

    friend bool operator==(const PicClass&, const PicClass&) = default;
    PicClass operator+(const PicClass& o) const { return {a + o.a, b + o.b}; }
    PicClass operator-(const PicClass& o) const { return {a - o.a, b - o.b}; }
    PicClass operator-() const { return {-a, -b}; }
};

inline PicClass hyperplane_class() { return {1, 0}; }
inline PicClass fiber_class() { return {0, 1}; }

/// Class group element of a singular scroll. In the HigherCodim regime the
/// class group is free of rank 2 with basis (H, R); in the Cone regime it is
/// free of rank 1 generated by a ruling plane R.
struct WeilClass {
    Regime regime;  ///< HigherCodim or Cone
    Int a;          ///< H coefficient (HigherCodim) or d (Cone)
    Int b;          ///< R coefficient (HigherCodim); unused for Cone

    static WeilClass pair(Int a, Int b) {
        return {Regime::HigherCodim, std::move(a), std::move(b)};
    }
    static WeilClass ruling(Int d) { return {Regime::Cone, std::move(d), 0}; }

    const Int& d() const;  ///< Cone coefficient; asserts the regime

    friend bool operator==(const WeilClass&, const WeilClass&) = default;
};

/// Intersection number of exactly r classes on the resolution, from the
/// relations H^r = f, H^(r-1)R = 1, R^2 H^(r-2) = 0:
/// prod(a_i H + b_i R) = (prod a_i) f + sum_j b_j prod_{i != j} a_i.
/// Errors: WrongArity.
Int pic_intersect(const Scroll& scroll, const std::vector<PicClass>& classes);

/// Canonical class (-r, f-2) of the resolution.
PicClass canonical_class(const Scroll& scroll);

/// Class (1, -f) of the exceptional divisor of the cone resolution.
/// Errors: NotACone.
PicClass exceptional_class(const Scroll& scroll);

/// Image in the class group of the pushforward of a*H + b*R: the identity
/// (a, b) in the HigherCodim regime, the multiple (a*f + b) of a ruling
/// plane in the Cone regime. Errors: SmoothScroll.
WeilClass strict_image(const Scroll& scroll, const PicClass& cls);

}  // namespace scrolldiv
