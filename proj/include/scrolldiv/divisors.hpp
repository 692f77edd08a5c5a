#pragma once

#include <optional>

#include "scrolldiv/classes.hpp"

namespace scrolldiv {

/// Normal form of a divisorial sheaf label O(a, b) on a singular scroll.
/// In the Cone regime every class has a unique representative with
/// 0 <= b < f; in the HigherCodim regime every label is already normal.
struct SheafForm {
    Int a;
    Int b;
    Regime regime;

    friend bool operator==(const SheafForm&, const SheafForm&) = default;
};

/// Whether the label O(a, b) is reflexive: always in the HigherCodim
/// regime, exactly when b < f on a cone. Errors: SmoothScroll.
bool is_reflexive(const Scroll& scroll, const Int& a, const Int& b);

/// Normal form of the divisorial sheaf attached to a class group element.
/// Errors: RegimeMismatch.
SheafForm sheaf_of_divisor(const Scroll& scroll, const WeilClass& cls);

/// Normal form of an arbitrary label O(a, b). Errors: SmoothScroll.
SheafForm normalize_sheaf(const Scroll& scroll, const Int& a, const Int& b);

/// Class group addition on normal forms. Errors: RegimeMismatch,
/// NotNormalForm.
SheafForm div_group_op(const Scroll& scroll, const SheafForm& s1, const SheafForm& s2);

/// Class group inverse in normal form. Errors: RegimeMismatch,
/// NotNormalForm.
SheafForm div_dual(const Scroll& scroll, const SheafForm& s);

/// Whether the class is Cartier. On a cone: f divides d. On a HigherCodim
/// scroll: true when the fiber part vanishes, otherwise undetermined
/// (nullopt). Errors: SmoothScroll, RegimeMismatch.
std::optional<bool> is_cartier(const Scroll& scroll, const WeilClass& cls);

/// Projective dimension of the linear system of the degree-d multiple of a
/// ruling plane on a cone: h^0 of its sheaf minus one. Errors: NotACone,
/// NonEffective.
Int dim_linear_system(const Scroll& scroll, const Int& d);

/// Closed-form shortcut for dim_linear_system: with d - 1 = k*f + h,
/// f*C(k+r-1,r) + (h+2)*C(k+r-1,r-1) - 1 when h < f-1, and f*C(k+r,r) when
/// h = f-1. The h = f-1 branch is a documented cross-check that disagrees
/// with the authoritative h^0 - 1 value (e.g. 2 vs 3 on the quadric cone,
/// d = 2); callers must not prefer it. Errors: NotACone, NonEffective.
Int dim_linear_system_closed(const Scroll& scroll, const Int& d);

}  // namespace scrolldiv
