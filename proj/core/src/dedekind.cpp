#include <cosmetry/dedekind.hpp>

#include <cstdint>
#include <numeric>

namespace cosmetry {

namespace {

using int128 = __int128;

// Largest modulus for which the direct sum fits a 64-bit accumulator:
// each term is bounded by b^2 and there are fewer than b of them, so the
// bound b^3 < 2^63 holds for every b below this limit.
constexpr long kDirectWordLimit = 1'500'000;

// Limit for the 128-bit reciprocity walk.  Each partial sum differs from
// a genuine Dedekind sum by a genuine Dedekind sum, so its reduced
// denominator divides 4*b^2 * 4*y^2 <= 16*b^4; with b <= 2^20 numerator
// and denominator stay far below 2^127.
constexpr long kReciprocityWordLimit = 1'048'576;

int128 igcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void check_pair_valid(const Int& a, const Int& b) {
    require(b >= 1, "dedekind: modulus b >= 1 violated");
    require(igcd(a, b) == 1, "dedekind: gcd(a, b) = 1 violated");
}

Rational rational_from_int128(int128 num, int128 den) {
    // Split into 64-bit halves; magnitudes here always fit 127 bits.
    auto to_int = [](int128 v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
        Int hi(static_cast<unsigned long>(u >> 64));
        Int lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
        Int r = (hi << 64) + lo;
        return neg ? Int(-r) : r;
    };
    return Rational(to_int(num), to_int(den));
}

Rational direct_word(long a, long b) {
    // s(a,b) = S / (4 b^2) with S = sum (2i - b)(2j - b), j = a*i mod b.
    std::int64_t S = 0;
    std::int64_t j = 0;
    for (std::int64_t i = 1; i < b; ++i) {
        j += a;
        if (j >= b) j -= b;
        S += (2 * i - b) * (2 * j - b);
    }
    return Rational(Int(S), Int(4) * b * b);
}

Rational direct_big(const Int& a, const Int& b) {
    Int S = 0;
    Int j = 0;
    for (Int i = 1; i < b; ++i) {
        j += a;
        if (j >= b) j -= b;
        S += (2 * i - b) * (2 * j - b);
    }
    return Rational(S, Int(4) * b * b);
}

Rational reciprocity_word(long a, long b) {
    // Running sum of (x^2 + y^2 + 1 - 3xy) / (12xy) with alternating sign,
    // reduced after every step.
    int128 num = 0, den = 1;
    int sign = 1;
    long x = a, y = b;
    while (x > 0) {
        int128 xx = x, yy = y;
        int128 tn = xx * xx + yy * yy + 1 - 3 * xx * yy;
        int128 td = 12 * xx * yy;
        if (sign < 0) tn = -tn;
        int128 g = igcd128(den, td);
        int128 scaled = den / g;
        num = num * (td / g) + tn * scaled;
        den = den / g * td;
        g = igcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        sign = -sign;
        long t = y % x;
        y = x;
        x = t;
    }
    return rational_from_int128(num, den);
}

Rational reciprocity_big(Int x, Int y) {
    Rational acc;
    int sign = 1;
    while (x > 0) {
        Int tn = x * x + y * y + 1 - 3 * x * y;
        Int td = 12 * x * y;
        Rational term(tn, td);
        acc += sign > 0 ? term : -term;
        sign = -sign;
        Int t = mod_floor(y, x);
        y = x;
        x = t;
    }
    return acc;
}

}  // namespace

BezoutPair bezout_rs(const Int& p, const Int& q) {
    require(q >= 2, "bezout_rs: q >= 2 violated");
    require(igcd(p, q) == 1, "bezout_rs: gcd(p, q) = 1 violated");
    Int r;
    int ok = mpz_invert(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    require(ok != 0, "bezout_rs: p has no inverse modulo q");
    Int s = (1 - p * r) / q;
    return BezoutPair{r, s, p, q};
}

Rational sawtooth(const Rational& x) {
    if (x.is_integer()) return Rational(0);
    return x - Rational(x.floor()) - Rational(Int(1), Int(2));
}

Rational dedekind_direct(const Int& a, const Int& b) {
    check_pair_valid(a, b);
    if (b == 1) return Rational(0);
    Int a0 = mod_floor(a, b);
    if (b <= kDirectWordLimit) return direct_word(a0.get_si(), b.get_si());
    return direct_big(a0, b);
}

Rational dedekind(const Int& a, const Int& b) {
    check_pair_valid(a, b);
    if (b == 1) return Rational(0);
    Int a0 = mod_floor(a, b);
    if (a0 == 0) return Rational(0);
    if (b <= kReciprocityWordLimit) return reciprocity_word(a0.get_si(), b.get_si());
    return reciprocity_big(a0, b);
}

}  // namespace cosmetry
