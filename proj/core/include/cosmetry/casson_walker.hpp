#pragma once

#include <cosmetry/rational.hpp>
#include <cosmetry/slope.hpp>

namespace cosmetry {

/// Casson-Walker invariant value; exact rational.
using CwValue = Rational;

/// |H_1| of the m/n surgery: |m|, with 0 signalling infinite homology for
/// 0-surgeries. The trivial necessary condition for any cosmetic pair.
Int h1_order(const Slope& slope);

/// Casson-Walker invariant of the m/n surgery via the surgery formula
///   lambda(S^3_K(m/n)) = (n/m) a2(K) - (1/2) s(n, m).
/// Normalization against other conventions in the literature is not
/// certified; all obstruction logic consumes only sums and differences of
/// lambda values, which are convention stable. Requires m > 0 after
/// canonicalization; negative moduli are rejected as unsupported
/// orientation normalization.
CwValue casson_walker(const Int& a2, const Slope& slope);

/// True iff lambda(m/n) = -lambda(m/n'), i.e.
///   (n + n')/m * a2 = (s(n, m) + s(n', m)) / 2   exactly.
/// The orientation-reversal condition lambda(-M) = -lambda(M) makes this
/// the Casson-Walker obstruction for a chirally cosmetic pair.
bool cw_pair_test(const Int& a2, const Int& m, const Int& n, const Int& nprime);

}  // namespace cosmetry
