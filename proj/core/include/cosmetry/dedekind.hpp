#pragma once

#include <cosmetry/rational.hpp>

namespace cosmetry {

/// Bezout data for a coprime pair (p, q): p*r + q*s = 1 with the
/// representative pinned to 0 <= r < q so downstream Seifert fractions
/// are deterministic.
struct BezoutPair {
    Int r;
    Int s;
    Int p;
    Int q;
};

/// Returns the unique (r, s) with p*r + q*s = 1 and 0 <= r < q.
/// Requires q >= 2 and gcd(p, q) = 1.
BezoutPair bezout_rs(const Int& p, const Int& q);

/// Sawtooth function ((x)): 0 on integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

/// Dedekind sum s(a, b) = sum_{i=1}^{b-1} ((i/b)) ((a*i/b)) by direct
/// O(b) summation. Requires b >= 1 and gcd(a, b) = 1.
Rational dedekind_direct(const Int& a, const Int& b);

/// Dedekind sum s(a, b) via the reciprocity law, O(log b) Euclidean
/// steps. Agrees exactly with dedekind_direct on every valid input.
Rational dedekind(const Int& a, const Int& b);

}  // namespace cosmetry
