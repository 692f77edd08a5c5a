#pragma once

#include <vector>

#include "scrolldiv/scroll.hpp"

namespace scrolldiv {

/// Cohomology dimensions (h^0, ..., h^r). Entries with 1 < i < r-1 are
/// always zero.
using CohomVector = std::vector<Int>;

/// Cohomology of the line bundle O(a, b) on the resolution, for every
/// integer pair. Three regions: a >= 0 by pushing forward to the base curve
/// (h^0 and h^1 are sums of max(0, +-(b + sigma + 1)) over size-a multiset
/// sums sigma of the splitting type), -r < a < 0 identically zero, a <= -r
/// by duality against (-r - a, f - 2 - b).
CohomVector cohomology_tilde(const Scroll& scroll, const Int& a, const Int& b);

/// Closed form for h^0 in the region a >= 0, b >= -1:
/// f*C(a+r-1, r) + (b+1)*C(a+r-1, r-1). Errors: OutOfValidityRegion.
Int h0_closed(const Scroll& scroll, const Int& a, const Int& b);

/// Euler characteristic of O(a, b) on the resolution.
Int chi_tilde(const Scroll& scroll, const Int& a, const Int& b);

/// Cohomology of the reflexive sheaf O_X(a, b) on a singular scroll, which
/// agrees with the resolution values for b >= -1. Errors: SmoothScroll,
/// OutOfValidityRegion.
CohomVector cohomology_x(const Scroll& scroll, const Int& a, const Int& b);

}  // namespace scrolldiv
