#include <cosmetry/casson_walker.hpp>

#include <cosmetry/dedekind.hpp>

namespace cosmetry {

Int h1_order(const Slope& slope) {
    require(!slope.is_infinity(), "h1_order: infinity slope not accepted");
    return abs(slope.m());
}

CwValue casson_walker(const Int& a2, const Slope& slope) {
    require(!slope.is_infinity(), "casson_walker: infinity slope not accepted");
    require(slope.m() != 0, "casson_walker: m = 0 surgery not supported");
    require(slope.m() > 0, "casson_walker: unsupported orientation normalization (m < 0)");
    const Int& m = slope.m();
    const Int& n = slope.n();
    Rational linear = Rational(n, m) * Rational(a2);
    return linear - Rational(Int(1), Int(2)) * dedekind(n, m);
}

bool cw_pair_test(const Int& a2, const Int& m, const Int& n, const Int& nprime) {
    require(m != 0, "cw_pair_test: m = 0 violated");
    require(m > 0, "cw_pair_test: unsupported orientation normalization (m < 0)");
    require(n != nprime, "cw_pair_test: n != n' violated");
    require(igcd(m, n) == 1, "cw_pair_test: gcd(m, n) = 1 violated");
    require(igcd(m, nprime) == 1, "cw_pair_test: gcd(m, n') = 1 violated");
    Rational lhs = Rational(n + nprime, m) * Rational(a2);
    Rational rhs = Rational(Int(1), Int(2)) * (dedekind(n, m) + dedekind(nprime, m));
    return lhs == rhs;
}

}  // namespace cosmetry
