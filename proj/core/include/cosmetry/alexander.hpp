#pragma once

#include <cosmetry/knot.hpp>
#include <cosmetry/laurent.hpp>

#include <vector>

namespace cosmetry {

/// Result of matching a polynomial against the Alexander form of L-space
/// knots: (-1)^k + sum_j (-1)^{k-j} (t^{n_j} + t^{-n_j}) with positive
/// exponents n_1 < ... < n_k. The constant polynomial 1 passes with k = 0.
struct LSpaceForm {
    bool passes = false;
    std::vector<long> exponents;  // present iff passes
};

/// Symmetric normalized Alexander polynomial of the torus knot T_{p,q},
/// computed by exact division of (t^{pq}-1)(t-1) by (t^p-1)(t^q-1).
/// Mirror images share Alexander polynomials, so the result depends on |p|
/// only; |p| <= 1 or q = 1 gives the unknot polynomial 1.
LaurentPoly alexander_torus(const Int& p, const Int& q);

/// Returns +-t^k * f satisfying g(t) = g(1/t) and g(1) = 1. Requires
/// f(1) = +-1 and a palindromic coefficient sequence up to a monomial
/// shift; anything else is rejected.
LaurentPoly normalize_symmetric(const LaurentPoly& f);

/// Alexander polynomial of a knot expression, normalized. Cables multiply:
/// the companion polynomial at t^q times the torus factor. Opaque
/// companions must carry a declared polynomial.
LaurentPoly alexander_of(const KnotExpr& knot);

/// True when every opaque leaf declares an Alexander polynomial, i.e. when
/// alexander_of will succeed.
bool alexander_available(const KnotExpr& knot);

/// The z^2 coefficient of the Conway polynomial. Computed recursively via
/// the cabling identity a2(K_{p,q}) = q^2 a2(K) + a2(T_{p,q}); when the
/// full Alexander polynomial is available the value is cross-checked
/// against f''(1)/2 (the derivative is evaluated at t = 1, the only
/// reading that makes a2 an integer), and the two routes must agree.
Int a2_of(const KnotExpr& knot);

/// Matches a symmetric-normalized polynomial against the L-space Alexander
/// form. Throws on non-normalized input.
LSpaceForm lspace_form(const LaurentPoly& f);

}  // namespace cosmetry
