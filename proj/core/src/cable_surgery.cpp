#include <cosmetry/cable_surgery.hpp>

namespace cosmetry {

namespace {

void check_cable_params(const Int& p, const Int& q) {
    require(q >= 2, "cable surgery: q >= 2 violated");
    require(igcd(p, q) == 1, "cable surgery: gcd(p, q) = 1 violated");
}

}  // namespace

std::pair<Int, Int> peripheral_to_fiber(const Int& p, const Int& q, const Int& m,
                                        const Int& n) {
    check_cable_params(p, q);
    return {n * p * q - m, n};
}

OuterBasisMap outer_basis(const Int& p, const Int& q) {
    check_cable_params(p, q);
    BezoutPair bz = bezout_rs(p, q);
    return OuterBasisMap{q, -bz.r, p, bz.s};
}

SeifertPiece surgery_piece(const Int& p, const Int& q, const Int& m, const Int& n) {
    check_cable_params(p, q);
    Int e = n * p * q - m;
    require(abs(e) > 1, "cable surgery: Seifert piece needs |npq - m| > 1");
    BezoutPair bz = bezout_rs(p, q);
    return sfs_disk({Rational(bz.r, q), Rational(n, e)});
}

SurgeryDescription describe_cable_surgery(const Int& p, const Int& q, const Slope& slope) {
    check_cable_params(p, q);
    require(!slope.is_infinity(), "cable surgery: infinity slope not accepted");
    const Int& m = slope.m();
    const Int& n = slope.n();
    Int e = n * p * q - m;
    if (e == 0) {
        return ReducibleSum{Slope::reduced(p, q), q, p};
    }
    if (abs(e) == 1) {
        return CompanionSurgery{Slope::reduced(m, n * q * q)};
    }
    return GraphPiece{"E(K)", surgery_piece(p, q, m, n), outer_basis(p, q)};
}

}  // namespace cosmetry
