#include <cosmetry/knot.hpp>

#include <doctest.h>

using cosmetry::CableSpacePiece;
using cosmetry::HyperbolicPiece;
using cosmetry::JsjGraph;
using cosmetry::jsj_graph;
using cosmetry::KnotExpr;
using cosmetry::parse_knot;
using cosmetry::TorusExteriorPiece;

TEST_CASE("parsing the reference expressions") {
    KnotExpr t = parse_knot("torus(2,3)");
    CHECK(t.kind() == KnotExpr::Kind::Torus);
    CHECK(t.p() == 2);
    CHECK(t.q() == 3);

    KnotExpr c = parse_knot("cable(3,2; torus(2,3))");
    CHECK(c.kind() == KnotExpr::Kind::Cable);
    CHECK(c.p() == 3);
    CHECK(c.q() == 2);
    CHECK(c.companion() == t);

    CHECK(parse_knot("unknot").is_trivial());
    CHECK(parse_knot("  torus( -2 , 3 )  ").p() == -2);

    CHECK_THROWS_AS(parse_knot("cable(3,1; unknot)"), cosmetry::domain_error);
    CHECK_THROWS_AS(parse_knot("cable(4,2; unknot)"), cosmetry::domain_error);
    CHECK_THROWS_AS(parse_knot("torus(4,2)"), cosmetry::domain_error);
    CHECK_THROWS_AS(parse_knot("torus(2,3) trailing"), cosmetry::domain_error);
    CHECK_THROWS_AS(parse_knot("knot(2,3)"), cosmetry::domain_error);
}

TEST_CASE("torus normalizations") {
    CHECK(parse_knot("torus(1,5)").is_trivial());
    CHECK(parse_knot("torus(-1,5)").is_trivial());
    CHECK(parse_knot("torus(5,1)").is_trivial());
    // T_{p,q} = T_{-p,-q}.
    KnotExpr k = KnotExpr::torus(2, -3);
    CHECK(k.p() == -2);
    CHECK(k.q() == 3);
}

TEST_CASE("opaque attributes") {
    KnotExpr k = parse_knot("opaque(w; hyperbolic; a2=5)");
    const auto& data = k.opaque_data();
    CHECK(data.name == "w");
    CHECK(data.hyperbolic);
    CHECK(data.a2 == cosmetry::Int(5));

    // Leading attribute without a name, comma separators.
    KnotExpr h = parse_knot("opaque(hyperbolic, a2=5)");
    CHECK(h.opaque_data().hyperbolic);
    CHECK(h.opaque_data().a2 == cosmetry::Int(5));

    KnotExpr j = parse_knot("opaque(w; jsj=[torus_ext(2,3), cable_space(3,2), hyp])");
    CHECK(j.opaque_data().declared_jsj.size() == 3);
}

TEST_CASE("expressions serialize back to the grammar") {
    for (const char* text : {"unknot", "torus(2,3)", "cable(3,2;torus(2,3))",
                             "opaque(w;a2=5;hyperbolic)"}) {
        CHECK(parse_knot(text).str() == text);
        CHECK(parse_knot(parse_knot(text).str()) == parse_knot(text));
    }
}

TEST_CASE("jsj graphs of the reference knots") {
    JsjGraph g = jsj_graph(parse_knot("torus(2,3)"));
    REQUIRE(g.size() == 1);
    CHECK(std::get<TorusExteriorPiece>(g[0]) == TorusExteriorPiece(2, 3));

    g = jsj_graph(parse_knot("cable(3,2; torus(2,3))"));
    REQUIRE(g.size() == 2);
    CHECK(std::get<TorusExteriorPiece>(g[0]) == TorusExteriorPiece(2, 3));
    CHECK(std::get<CableSpacePiece>(g[1]) == CableSpacePiece{3, 2});

    g = jsj_graph(parse_knot("cable(5,2; opaque(hyperbolic))"));
    REQUIRE(g.size() == 2);
    CHECK(std::holds_alternative<HyperbolicPiece>(g[0]));
    CHECK(std::get<CableSpacePiece>(g[1]) == CableSpacePiece{5, 2});

    CHECK(jsj_graph(parse_knot("unknot")).empty());
    CHECK_THROWS_AS(jsj_graph(parse_knot("opaque(w)")), cosmetry::domain_error);
}

TEST_CASE("jsj graph length tracks cabling depth") {
    KnotExpr k = parse_knot("torus(2,3)");
    std::size_t depth = 1;
    for (long p : {7, 9, 11}) {
        k = KnotExpr::cable(p, 2, k);
        ++depth;
        CHECK(jsj_graph(k).size() == depth);
    }
}

TEST_CASE("containment patterns over a JSJ graph") {
    using cosmetry::jsj_contains;
    using cosmetry::TorusPattern;
    JsjGraph cable_graph = jsj_graph(parse_knot("cable(3,2; torus(2,3))"));
    // The mirror trefoil exterior is a different oriented piece.
    CHECK_FALSE(jsj_contains(cable_graph, TorusPattern::exact(-3, 2)));
    CHECK(jsj_contains(cable_graph, TorusPattern::exact(2, 3)));
    CHECK(jsj_contains(cable_graph, TorusPattern::exact_unoriented(-3, 2)));
    CHECK(jsj_contains(cable_graph, TorusPattern::any_multiplicity_two()));

    JsjGraph hyp_graph = jsj_graph(parse_knot("opaque(hyperbolic)"));
    CHECK_FALSE(jsj_contains(hyp_graph, TorusPattern::any_multiplicity_two()));
    CHECK_FALSE(jsj_contains(hyp_graph, TorusPattern::exact(2, 3)));

    JsjGraph no_two = jsj_graph(parse_knot("torus(3,5)"));
    CHECK_FALSE(jsj_contains(no_two, TorusPattern::any_multiplicity_two()));
}

TEST_CASE("oriented torus exterior identities") {
    CHECK(TorusExteriorPiece(2, 3) == TorusExteriorPiece(3, 2));
    CHECK(TorusExteriorPiece(2, 3) == TorusExteriorPiece(-2, -3));
    CHECK_FALSE(TorusExteriorPiece(2, 3) == TorusExteriorPiece(-2, 3));
    CHECK(TorusExteriorPiece(-2, 3) == TorusExteriorPiece(-3, 2));
    CHECK(TorusExteriorPiece(2, 3).mirrored() == TorusExteriorPiece(-2, 3));
    CHECK(TorusExteriorPiece(2, 3).same_unoriented(TorusExteriorPiece(-2, 3)));
    CHECK_THROWS_AS(TorusExteriorPiece(1, 3), cosmetry::domain_error);
    CHECK_THROWS_AS(TorusExteriorPiece(4, 2), cosmetry::domain_error);
}
