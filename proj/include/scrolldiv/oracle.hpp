#pragma once

#include <vector>

#include "scrolldiv/cohomology.hpp"
#include "scrolldiv/scroll.hpp"

namespace scrolldiv::oracle {

/// Reference implementation of cohomology_tilde by explicit enumeration of
/// every size-a multiset of splitting-type entries (no dynamic programming,
/// no code shared with the fast path). The enumeration bound caps the
/// multiset size at 8, on either side of the duality. Errors:
/// EnumerationTooLarge.
CohomVector naive_cohomology(const Scroll& scroll, const Int& a, const Int& b);

/// One sampled value chi(I-twist k) of the Hilbert polynomial of the
/// intersection scheme of two effective multiples of ruling planes.
struct HilbertSample {
    Int k;
    Int chi;
};

/// Samples the Hilbert polynomial chi_Y(k) at k = 0..r via the alternating
/// sum over the resolution, using naive_cohomology only. Errors: NotACone,
/// NonEffective, EnumerationTooLarge.
std::vector<HilbertSample> hilbert_samples(const Scroll& scroll, const Int& d1, const Int& d2);

struct HilbertFit {
    Int degree;
    Int chi0;
};

/// Degree (leading finite difference, normalized for dimension r-2) and
/// chi(O_Y) = chi_Y(0) of the intersection scheme, fitted from
/// hilbert_samples. Checks that the sampled polynomial has the expected
/// dimension. Errors: NotACone, NonEffective, EnumerationTooLarge.
HilbertFit hilbert_degree_genus(const Scroll& scroll, const Int& d1, const Int& d2);

}  // namespace scrolldiv::oracle
