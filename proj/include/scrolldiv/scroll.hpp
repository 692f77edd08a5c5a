#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scrolldiv/arith.hpp"

namespace scrolldiv {

/// Singularity regime of a rational normal scroll, by the number l of zero
/// entries in the splitting type: Smooth (l = 0), HigherCodim
/// (1 <= l <= r-2, vertex of codimension > 2), Cone (l = r-1, vertex of
/// codimension 2).
enum class Regime { Smooth, HigherCodim, Cone };

std::string_view regime_name(Regime regime);

/// A rational normal scroll of splitting type (a_1 <= ... <= a_r) in P^n.
struct Scroll {
    std::vector<Int> degrees;  ///< ascending, entries >= 0, not all zero
    Int f;                     ///< degree: sum of entries
    int r;                     ///< dimension: number of entries
    Int n;                     ///< ambient dimension: f + r - 1
    Regime regime;
    int vertex_dim;            ///< dimension of the vertex; -1 when smooth

    bool is_cone() const { return regime == Regime::Cone; }
    bool is_singular() const { return regime != Regime::Smooth; }
};

/// Builds a scroll from its splitting type (sorted ascending if needed).
/// Errors: EmptyOrAllZero, LengthOne, NegativeEntry.
Scroll classify(std::vector<Int> degrees);

/// Parses a comma-separated splitting type such as "0,0,3".
/// Throws std::invalid_argument on malformed input.
std::vector<Int> parse_scroll_spec(const std::string& spec);

}  // namespace scrolldiv
