#include <cosmetry/obstruction.hpp>

#include <cosmetry/casson_walker.hpp>

#include <doctest.h>

#include <numeric>

#include "oracles.hpp"

using cosmetry::CaseId;
using cosmetry::check_iterated;
using cosmetry::check_pair;
using cosmetry::check_theorem1;
using cosmetry::claim1_certificate;
using cosmetry::claimA_analyze;
using cosmetry::claimB_analyze;
using cosmetry::classify_case;
using cosmetry::hom_sign_check;
using cosmetry::Int;
using cosmetry::KnotExpr;
using cosmetry::MatchMode;
using cosmetry::parse_knot;
using cosmetry::Verdict;

TEST_CASE("case classification") {
    CHECK(classify_case(3, 2, 6, 1, 2) == CaseId::Case1);
    CHECK(classify_case(1, 2, 3, 2, 1) == CaseId::Case2);
    CHECK(classify_case(3, 2, 13, 2, 1) == CaseId::Case3);
    CHECK(classify_case(3, 2, 1, 1, 2) == CaseId::Case4);
    CHECK_THROWS_AS(classify_case(3, 2, 5, 2, 2), cosmetry::domain_error);
}

TEST_CASE("classification is exhaustive and consistent over a grid") {
    for (long p : {-5, -3, -1, 1, 2, 3, 5}) {
        for (long q = 2; q <= 5; ++q) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            for (long m = 1; m <= 40; ++m) {
                for (long n = 1; n <= 6; ++n) {
                    for (long np = 1; np < n; ++np) {
                        if (std::gcd(m, n) != 1 || std::gcd(m, np) != 1) continue;
                        long e = std::abs(n * p * q - m);
                        long ep = std::abs(np * p * q - m);
                        CaseId expected = (e == 0 || ep == 0)   ? CaseId::Case1
                                          : (e == 1 && ep == 1) ? CaseId::Case2
                                          : (e == 1 || ep == 1) ? CaseId::Case3
                                                                : CaseId::Case4;
                        CHECK(classify_case(p, q, m, n, np) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("claim 1 certificate never closes") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{3, 2}, {1, 2}, {5, 3}, {-7, 4}}) {
        auto cert = claim1_certificate(p, q);
        CHECK_FALSE(cert.consistent);
        CHECK(cert.residual_c2 == 2 * Int(p));
        CHECK(Int(p) * cert.r + Int(q) * cert.s == 1);
    }
}

TEST_CASE("claim A analysis on the reference inputs") {
    auto out = claimA_analyze(3, 3 + 14, 9, 2, 1);  // q != 2 (17 coprime to 3)
    CHECK(out.impossible());

    out = claimA_analyze(3, 2, 9, 2, 1);
    REQUIRE(!out.impossible());
    CHECK(out.obligation->torus_p == -3);
    CHECK(out.obligation->torus_q == 2);
    CHECK(out.obligation->lspace_required);
    CHECK_FALSE(out.obligation->a2_zero_required);
    CHECK(out.obligation->witness_i == -1);
    CHECK(out.obligation->witness_j == 0);

    // Exhaustive small-range slack oracle for the same system.
    auto slack = oracles::claim_slack_brute(1, 2, 3, 2, 1);
    REQUIRE(slack.has_value());
    CHECK(slack->first == -1);
    CHECK(slack->second == 0);

    // n - n' = -1 contradicts the case assumption.
    out = claimA_analyze(1, 2, 11, 3, 4);
    CHECK(out.impossible());
}

TEST_CASE("claim A derived facts hold whenever an obligation is produced") {
    for (long p : {-7, -5, -3, 3, 5, 7}) {
        for (long m = 1; m <= 60; ++m) {
            for (long n = 1; n <= 12; ++n) {
                for (long np = 1; np < n; ++np) {
                    if (std::gcd(m, n) != 1 || std::gcd(m, np) != 1) continue;
                    long e = n * 2 * p - m;
                    long ep = np * 2 * p - m;
                    if (std::abs(e) <= 1 || std::abs(ep) <= 1) continue;
                    auto out = claimA_analyze(p, 2, m, n, np);
                    if (out.impossible()) continue;
                    CHECK((n + np) * 2 * p == 2 * m);
                    CHECK(n - np == 1);
                    CHECK(e == (n - np) * p);
                    CHECK(out.obligation->torus_p == -p);
                    // Slack witnesses agree with the exhaustive oracle.
                    auto slack = oracles::claim_slack_brute(1, 2, e, n, np, 40);
                    REQUIRE(slack.has_value());
                    CHECK(out.obligation->witness_i == slack->first);
                    CHECK(out.obligation->witness_j == slack->second);
                }
            }
        }
    }
}

TEST_CASE("claim B analysis on the reference inputs") {
    auto out = claimB_analyze(3, 2, 9, 2, 1);
    CHECK(out.impossible());  // p must be +-1

    out = claimB_analyze(1, 5 + 14, 5, 4, 1);
    CHECK(out.impossible());  // q must be 2 (19 coprime to 1)

    out = claimB_analyze(1, 2, 5, 4, 1);
    REQUIRE(!out.impossible());
    CHECK(out.obligation->a2_zero_required);
    CHECK_FALSE(out.obligation->lspace_required);
    CHECK(out.obligation->torus_q == 2);
    CHECK(abs(out.obligation->torus_p) == 3);
    // The obligation piece has multiplicities {2, 3}.
    Int lo = out.obligation->torus_q, hi = abs(out.obligation->torus_p);
    CHECK(lo == 2);
    CHECK(hi == 3);
    CHECK((out.obligation->witness_i - out.obligation->witness_j) * 1 == -1);
}

TEST_CASE("claim B derived facts hold whenever an obligation is produced") {
    for (long p : {-1, 1}) {
        for (long m = 1; m <= 60; ++m) {
            for (long n = 1; n <= 12; ++n) {
                for (long np = 1; np < n; ++np) {
                    if (std::gcd(m, n) != 1 || std::gcd(m, np) != 1) continue;
                    long e = n * 2 * p - m;
                    long ep = np * 2 * p - m;
                    if (std::abs(e) <= 1 || std::abs(ep) <= 1) continue;
                    auto out = claimB_analyze(p, 2, m, n, np);
                    if (out.impossible()) continue;
                    CHECK(abs(out.obligation->torus_p) == n - np);
                    CHECK(out.obligation->torus_q == 2);
                    // Casson-Walker consistency: the a2 = 0 requirement is
                    // satisfiable on the slope side.
                    CHECK(cosmetry::cw_pair_test(0, m, n, np));
                }
            }
        }
    }
}

TEST_CASE("check_pair on the reference inputs") {
    KnotExpr hyp = parse_knot("opaque(w; hyperbolic; a2=5)");
    auto report = check_pair(hyp, 3, 2, 9, 2, 1);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "case4");

    auto rep2 = check_pair(parse_knot("torus(2,3)"), 5, 3, 26, 3, 1);
    CHECK(classify_case(5, 3, 26, 3, 1) == CaseId::Case4);
    CHECK(rep2.verdict == Verdict::Obstructed);

    auto rep3 = check_pair(parse_knot("torus(-2,3)"), 3, 2, 9, 2, 1);
    CHECK(rep3.verdict == Verdict::Inconclusive);
    REQUIRE(!rep3.witnesses.empty());
    CHECK(rep3.witnesses.front().second.find("torus_ext(-3,2)") != std::string::npos);

    CHECK_THROWS_AS(check_pair(KnotExpr::unknot(), 3, 2, 9, 2, 1), cosmetry::domain_error);
    CHECK_THROWS_AS(check_pair(hyp, 3, 2, -9, 2, 1), cosmetry::domain_error);
}

TEST_CASE("check_pair covers the other cases") {
    KnotExpr trefoil = parse_knot("torus(2,3)");
    auto report = check_pair(trefoil, 3, 2, 6, 1, 5);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "case1");

    report = check_pair(trefoil, 1, 2, 5, 3, 2);  // |e| = |e'| = 1
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "case2");

    // Case 2 with a2 = 0: the trefoil has a2 = 1, so build an a2 = 0 opaque.
    KnotExpr flat = parse_knot("opaque(w; hyperbolic; a2=0)");
    report = check_pair(flat, 1, 2, 5, 3, 2);
    CHECK(report.verdict == Verdict::Inconclusive);
    CHECK(report.fired == "case2");

    report = check_pair(trefoil, 3, 2, 13, 2, 1);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "case3");
}

TEST_CASE("check_pair leaves the claim B escape open only when it is met") {
    // The surgery piece for (1,2,5,4) recognizes as the mirror-oriented
    // E(T_{-3,2}); the escape needs that exact oriented piece plus a2 = 0.
    auto open = check_pair(parse_knot("opaque(w; a2=0; jsj=[torus_ext(-3,2), cable_space(5,2)])"),
                           1, 2, 5, 4, 1);
    CHECK(open.verdict == Verdict::Inconclusive);
    REQUIRE(!open.witnesses.empty());
    CHECK(open.witnesses.front().first == "claimB");

    // Same multiplicities, wrong orientation: obstructed.
    auto wrong_orient = check_pair(
        parse_knot("opaque(w; a2=0; jsj=[torus_ext(3,2), cable_space(5,2)])"), 1, 2, 5, 4, 1);
    CHECK(wrong_orient.verdict == Verdict::Obstructed);

    // Right piece, nonzero a2: obstructed.
    auto wrong_a2 = check_pair(
        parse_knot("opaque(w; a2=3; jsj=[torus_ext(-3,2), cable_space(5,2)])"), 1, 2, 5, 4, 1);
    CHECK(wrong_a2.verdict == Verdict::Obstructed);
}

TEST_CASE("check_pair is order-insensitive") {
    KnotExpr mirror = parse_knot("torus(-2,3)");
    auto a = check_pair(mirror, 3, 2, 9, 2, 1);
    auto b = check_pair(mirror, 3, 2, 9, 1, 2);
    CHECK(a.verdict == b.verdict);
    KnotExpr hyp = parse_knot("opaque(w; hyperbolic; a2=5)");
    CHECK(check_pair(hyp, 3, 2, 9, 2, 1).verdict == check_pair(hyp, 3, 2, 9, 1, 2).verdict);
}

TEST_CASE("check_theorem1 on the reference inputs") {
    auto report = check_theorem1(parse_knot("torus(2,3)"), 3, 5);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "i");

    report = check_theorem1(parse_knot("torus(2,3)"), 3, 2);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "ii");

    report = check_theorem1(parse_knot("torus(-2,3)"), 3, 2);
    CHECK(report.verdict == Verdict::Inconclusive);

    // Conservative unoriented matching refuses to fire condition ii here.
    report = check_theorem1(parse_knot("torus(2,3)"), 3, 2, MatchMode::Unoriented);
    CHECK(report.verdict == Verdict::Inconclusive);

    // p = +-1: condition iii needs no multiplicity-2 piece at all.
    report = check_theorem1(parse_knot("torus(3,5)"), 1, 2);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "iii");

    // p = +-1 with a multiplicity-2 piece: condition iv uses a2.
    report = check_theorem1(parse_knot("torus(2,3)"), 1, 2);
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "iv");

    CHECK_THROWS_AS(check_theorem1(KnotExpr::unknot(), 3, 2), cosmetry::domain_error);
}

TEST_CASE("theorem obstruction implies pair obstruction on a sampled grid") {
    std::vector<std::pair<KnotExpr, std::pair<long, long>>> cases = {
        {parse_knot("torus(2,3)"), {3, 5}},
        {parse_knot("torus(2,3)"), {3, 2}},
        {parse_knot("torus(3,5)"), {1, 2}},
        {parse_knot("torus(2,3)"), {1, 2}},
        {parse_knot("opaque(w; hyperbolic; a2=7)"), {5, 2}},
    };
    for (const auto& [knot, pq] : cases) {
        auto theorem = check_theorem1(knot, pq.first, pq.second);
        if (theorem.verdict != Verdict::Obstructed) continue;
        for (long m = 1; m <= 60; ++m) {
            for (long n = 1; n <= 20; ++n) {
                for (long np = 1; np < n; ++np) {
                    if (std::gcd(m, n) != 1 || std::gcd(m, np) != 1) continue;
                    auto pair = check_pair(knot, pq.first, pq.second, m, n, np);
                    CHECK(pair.verdict == Verdict::Obstructed);
                }
            }
        }
    }
}

TEST_CASE("hom sign check") {
    CHECK_FALSE(hom_sign_check({Int(-3), Int(5), Int(2)}));
    CHECK(hom_sign_check({Int(2), Int(3), Int(5)}));
    CHECK(hom_sign_check({}));
    CHECK(hom_sign_check({Int(-2), Int(-9)}));
    CHECK_THROWS_AS(hom_sign_check({Int(1), Int(0)}), cosmetry::domain_error);
}

TEST_CASE("check_iterated on the reference inputs") {
    auto report = check_iterated({{5, 3}}, KnotExpr::unknot());
    CHECK(report.verdict == Verdict::Obstructed);
    CHECK(report.fired == "known-classification");

    report = check_iterated({{2, 3}}, KnotExpr::unknot());
    CHECK(report.verdict == Verdict::KnownFamily);

    report = check_iterated({{3, 2}}, KnotExpr::unknot());
    CHECK(report.verdict == Verdict::KnownFamily);

    report = check_iterated({{2, 3}, {3, 2}}, KnotExpr::unknot());
    CHECK(report.verdict == Verdict::Obstructed);

    report = check_iterated({{3, 2}}, parse_knot("opaque(w; hyperbolic)"));
    CHECK(report.verdict == Verdict::Obstructed);

    report = check_iterated({}, parse_knot("opaque(w; hyperbolic)"));
    CHECK(report.verdict == Verdict::NotApplicable);

    CHECK_THROWS_AS(check_iterated({{1, 3}}, KnotExpr::unknot()), cosmetry::domain_error);
    CHECK_THROWS_AS(check_iterated({{3, 2}}, parse_knot("torus(2,3)")), cosmetry::domain_error);
}
