#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace scrolldiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Quotient and remainder with remainder normalized into [0, divisor).
struct EuclidResult {
    Int quot;
    Int rem;
};

/// Euclidean division by a positive divisor.
EuclidResult euclid_div(const Int& value, const Int& divisor);

/// Floor of value / divisor for positive divisor.
Int floor_div(const Int& value, const Int& divisor);

/// Ceiling of value / divisor for positive divisor.
Int ceil_div(const Int& value, const Int& divisor);

/// Floor of an exact rational.
Int rat_floor(const Rat& q);

/// Ceiling of an exact rational.
Int rat_ceil(const Rat& q);

/// Binomial coefficient with the vanishing convention: C(n,k) = 0 whenever
/// k < 0 or n < k (in particular for every negative n with k >= 0), and
/// C(n,0) = 1 for n >= 0.
Int binomial(const Int& n, const Int& k);

}  // namespace scrolldiv
