#include <cosmetry/alexander.hpp>

namespace cosmetry {

namespace {

Int a2_recursive(const KnotExpr& knot) {
    switch (knot.kind()) {
        case KnotExpr::Kind::Unknot:
            return 0;
        case KnotExpr::Kind::Torus: {
            Int d2 = alexander_torus(knot.p(), knot.q()).second_derivative_one();
            require(d2 % 2 == 0, "a2: torus second derivative must be even");
            return d2 / 2;
        }
        case KnotExpr::Kind::Cable: {
            Int torus_part = a2_recursive(KnotExpr::torus(knot.p(), knot.q()));
            return knot.q() * knot.q() * a2_recursive(knot.companion()) + torus_part;
        }
        case KnotExpr::Kind::Opaque: {
            const OpaqueData& data = knot.opaque_data();
            if (data.a2) return *data.a2;
            if (data.alexander) {
                LaurentPoly f = normalize_symmetric(*data.alexander);
                Int d2 = f.second_derivative_one();
                require(d2 % 2 == 0, "a2: declared polynomial has odd second derivative");
                return d2 / 2;
            }
            throw domain_error("a2: opaque companion '" + data.name +
                               "' declares neither a2 nor an Alexander polynomial");
        }
    }
    throw domain_error("a2: unreachable knot kind");
}

}  // namespace

LaurentPoly alexander_torus(const Int& p, const Int& q) {
    require(q >= 1, "alexander_torus: q >= 1 violated");
    require(igcd(p, q) == 1, "alexander_torus: gcd(p, q) = 1 violated");
    Int a = abs(p);
    if (a <= 1 || q == 1) return LaurentPoly::one();
    require(fits_long(a * q), "alexander_torus: parameters too large");
    long pl = a.get_si();
    long ql = q.get_si();
    LaurentPoly numerator =
        LaurentPoly::power_minus_one(pl * ql) * LaurentPoly::power_minus_one(1);
    LaurentPoly denominator =
        LaurentPoly::power_minus_one(pl) * LaurentPoly::power_minus_one(ql);
    LaurentPoly quotient = numerator.divided_exact(denominator);
    return normalize_symmetric(quotient);
}

LaurentPoly normalize_symmetric(const LaurentPoly& f) {
    Int v = f.eval_one();
    require(v == 1 || v == -1, "normalize_symmetric: f(1) must be +1 or -1");
    long lo = f.min_exp();
    long hi = f.max_exp();
    require((lo + hi) % 2 == 0, "normalize_symmetric: no symmetrizing shift exists");
    LaurentPoly g = f.shifted(-(lo + hi) / 2);
    if (v < 0) g = -g;
    require(g.is_symmetric(), "normalize_symmetric: coefficients are not palindromic");
    return g;
}

LaurentPoly alexander_of(const KnotExpr& knot) {
    switch (knot.kind()) {
        case KnotExpr::Kind::Unknot:
            return LaurentPoly::one();
        case KnotExpr::Kind::Torus:
            return alexander_torus(knot.p(), knot.q());
        case KnotExpr::Kind::Cable: {
            require(fits_long(knot.q()), "alexander: cable parameter too large");
            LaurentPoly companion = alexander_of(knot.companion());
            LaurentPoly torus_factor = alexander_torus(knot.p(), knot.q());
            return normalize_symmetric(companion.substituted_power(knot.q().get_si()) *
                                       torus_factor);
        }
        case KnotExpr::Kind::Opaque: {
            const OpaqueData& data = knot.opaque_data();
            require(data.alexander.has_value(),
                    "alexander: opaque companion lacks a declared Alexander polynomial");
            return normalize_symmetric(*data.alexander);
        }
    }
    throw domain_error("alexander: unreachable knot kind");
}

bool alexander_available(const KnotExpr& knot) {
    switch (knot.kind()) {
        case KnotExpr::Kind::Unknot:
        case KnotExpr::Kind::Torus:
            return true;
        case KnotExpr::Kind::Cable:
            return alexander_available(knot.companion());
        case KnotExpr::Kind::Opaque:
            return knot.opaque_data().alexander.has_value();
    }
    return false;
}

Int a2_of(const KnotExpr& knot) {
    Int recursive = a2_recursive(knot);
    if (alexander_available(knot)) {
        Int d2 = alexander_of(knot).second_derivative_one();
        require(d2 % 2 == 0, "a2: second derivative must be even");
        Int from_poly = d2 / 2;
        require(from_poly == recursive,
                "a2: cabling identity and polynomial routes disagree (inconsistent "
                "declared data)");
    }
    return recursive;
}

LSpaceForm lspace_form(const LaurentPoly& f) {
    require(!f.is_zero() && f.is_symmetric() && f.eval_one() == 1,
            "lspace_form: input must be symmetric-normalized");
    LSpaceForm result;
    std::vector<long> exponents;
    for (const auto& [e, c] : f.terms()) {
        if (e > 0) exponents.push_back(e);
    }
    const std::size_t k = exponents.size();
    // Expected coefficients: (-1)^{k-j} at n_j for j = 1..k, (-1)^k at 0.
    Int expected_c0 = k % 2 == 0 ? 1 : -1;
    if (f.coeff(0) != expected_c0) return result;
    for (std::size_t j = 1; j <= k; ++j) {
        Int expected = (k - j) % 2 == 0 ? 1 : -1;
        if (f.coeff(exponents[j - 1]) != expected) return result;
    }
    result.passes = true;
    result.exponents = std::move(exponents);
    return result;
}

}  // namespace cosmetry
