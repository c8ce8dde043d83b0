#include <cosmetry/laurent.hpp>

#include <doctest.h>

using cosmetry::Int;
using cosmetry::LaurentPoly;

namespace {

LaurentPoly trefoil() {
    // t - 1 + 1/t
    LaurentPoly f = LaurentPoly::monomial(1, 1);
    f += LaurentPoly::monomial(0, -1);
    f += LaurentPoly::monomial(-1, 1);
    return f;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly f = LaurentPoly::monomial(2, 3);
    f += LaurentPoly::monomial(2, -3);
    CHECK(f.is_zero());
    CHECK(f.str() == "0:0");
}

TEST_CASE("arithmetic and serialization") {
    LaurentPoly f = trefoil();
    CHECK(f.str() == "-1:1,0:-1,1:1");
    CHECK(f.coeff(1) == 1);
    CHECK(f.coeff(5) == 0);
    CHECK(f.min_exp() == -1);
    CHECK(f.max_exp() == 1);
    CHECK(f.eval_one() == 1);
    CHECK((f * LaurentPoly::one()) == f);
    CHECK((f - f).is_zero());
    CHECK(f.shifted(2).str() == "1:1,2:-1,3:1");
    CHECK(f.substituted_power(2).str() == "-2:1,0:-1,2:1");
    CHECK(f.substituted_power(-1) == f);
}

TEST_CASE("second derivative at one") {
    // (t - 1 + 1/t)'' at 1: 0 + 0 + 2 = 2.
    CHECK(trefoil().second_derivative_one() == 2);
    CHECK(LaurentPoly::one().second_derivative_one() == 0);
}

TEST_CASE("exact division recovers factors") {
    LaurentPoly a = LaurentPoly::power_minus_one(6) * LaurentPoly::power_minus_one(1);
    LaurentPoly b = LaurentPoly::power_minus_one(2) * LaurentPoly::power_minus_one(3);
    LaurentPoly q = a.divided_exact(b);
    CHECK(q * b == a);
    CHECK_THROWS_AS(LaurentPoly::power_minus_one(3).divided_exact(
                        LaurentPoly::power_minus_one(2)),
                    cosmetry::domain_error);
}

TEST_CASE("product division round trip with shifted factors") {
    LaurentPoly f = trefoil();
    LaurentPoly g = LaurentPoly::monomial(-2, 5) + LaurentPoly::monomial(3, -7);
    CHECK((f * g).divided_exact(g) == f);
    CHECK((f * g).divided_exact(f) == g);
}

TEST_CASE("symmetry detection") {
    CHECK(trefoil().is_symmetric());
    CHECK_FALSE(trefoil().shifted(1).is_symmetric());
    CHECK(LaurentPoly::one().is_symmetric());
}
