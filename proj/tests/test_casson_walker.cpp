#include <cosmetry/casson_walker.hpp>

#include <cosmetry/dedekind.hpp>

#include <doctest.h>

#include <numeric>

using cosmetry::casson_walker;
using cosmetry::cw_pair_test;
using cosmetry::dedekind;
using cosmetry::h1_order;
using cosmetry::Int;
using cosmetry::Rational;
using cosmetry::reduce_slope;
using cosmetry::Slope;

TEST_CASE("homology order") {
    CHECK(h1_order(reduce_slope(9, 2)) == 9);
    CHECK(h1_order(reduce_slope(-7, 3)) == 7);
    CHECK(h1_order(reduce_slope(0, 1)) == 0);
    CHECK_THROWS_AS(h1_order(Slope::infinity()), cosmetry::domain_error);
}

TEST_CASE("surgery formula reference values") {
    CHECK(casson_walker(1, reduce_slope(9, 2)) == Rational(Int(4), Int(27)));
    CHECK(casson_walker(1, reduce_slope(9, 1)) == Rational(Int(-4), Int(27)));
    // With a2 = 0 only the Dedekind term remains.
    for (long m = 1; m <= 30; ++m) {
        CHECK(casson_walker(0, reduce_slope(m, 1)) ==
              -Rational(Int(1), Int(2)) * dedekind(1, m));
    }
    CHECK_THROWS_AS(casson_walker(1, reduce_slope(0, 1)), cosmetry::domain_error);
    CHECK_THROWS_AS(casson_walker(1, reduce_slope(-9, 2)), cosmetry::domain_error);
}

TEST_CASE("pair test reference values") {
    CHECK(cw_pair_test(1, 9, 2, 1));
    CHECK_FALSE(cw_pair_test(1, 9, 4, 2 + 9));  // non-member pair, gcd-valid
    CHECK_FALSE(cw_pair_test(1, 9, 4, 2));
    // a2 = 0 with n' = m - n: oddness of the Dedekind sum makes both sides 0.
    for (long m = 3; m <= 31; m += 2) {
        for (long n = 1; n < m; ++n) {
            if (std::gcd(n, m) != 1) continue;
            long np = m - n;
            if (np == n) continue;
            CHECK(cw_pair_test(0, m, n, np));
        }
    }
    CHECK_THROWS_AS(cw_pair_test(1, 9, 2, 2), cosmetry::domain_error);
    CHECK_THROWS_AS(cw_pair_test(1, -9, 2, 1), cosmetry::domain_error);
    CHECK_THROWS_AS(cw_pair_test(1, 9, 3, 1), cosmetry::domain_error);
}

TEST_CASE("pair test is symmetric in n and n'") {
    for (long m : {5L, 9L, 27L, 25L}) {
        for (long n = 1; n <= 12; ++n) {
            for (long np = 1; np < n; ++np) {
                if (std::gcd(n, m) != 1 || std::gcd(np, m) != 1) continue;
                CHECK(cw_pair_test(1, m, n, np) == cw_pair_test(1, m, np, n));
            }
        }
    }
}

TEST_CASE("lemma identity: s(2m+2, m) + s(2m-2, m) = 0 on a sample") {
    for (long m = 3; m <= 99; m += 2) {
        CHECK(dedekind(2 * m + 2, m) + dedekind(2 * m - 2, m) == Rational(0));
    }
}

TEST_CASE("family identity on a small grid") {
    for (long r = 3; r <= 15; r += 2) {
        Int a2 = Int(r * r - 1) / 8;
        for (long k = 0; k <= 5; ++k) {
            Int m = Int(r) * r * (2 * k + 1);
            Int n = (Int(r) * (2 * k + 1) + 1) / 2;
            Int np = (Int(r) * (2 * k + 1) - 1) / 2;
            CHECK(cw_pair_test(a2, m, n, np));
        }
    }
}

TEST_CASE("shift by a full turn adds exactly a2") {
    for (long m : {3L, 7L, 9L, 25L}) {
        for (long n = 1; n <= 10; ++n) {
            if (std::gcd(n, m) != 1) continue;
            for (long a2 : {-3L, 0L, 1L, 5L}) {
                Rational lhs = casson_walker(a2, reduce_slope(m, n + m)) -
                               casson_walker(a2, reduce_slope(m, n));
                CHECK(lhs == Rational(a2));
            }
        }
    }
}
