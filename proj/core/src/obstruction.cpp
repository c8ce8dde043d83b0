#include <cosmetry/obstruction.hpp>

#include <cosmetry/casson_walker.hpp>

#include <sstream>

namespace cosmetry {

namespace {

void check_cable_params(const Int& p, const Int& q) {
    require(q >= 2, "obstruction: q >= 2 violated");
    require(igcd(p, q) == 1, "obstruction: gcd(p, q) = 1 violated");
}

void check_common_params(const Int& p, const Int& q, const Int& n, const Int& nprime) {
    check_cable_params(p, q);
    require(n >= 1 && nprime >= 1, "obstruction: slope denominators must be >= 1");
    require(n != nprime, "obstruction: n != n' violated (not a cosmetic pair question)");
}

void check_pair_params(const Int& p, const Int& q, const Int& m, const Int& n,
                       const Int& nprime) {
    check_common_params(p, q, n, nprime);
    require(igcd(m, n) == 1, "obstruction: gcd(m, n) = 1 violated");
    require(igcd(m, nprime) == 1, "obstruction: gcd(m, n') = 1 violated");
}

void check_case4(const Int& p, const Int& q, const Int& m, const Int& n,
                 const Int& nprime) {
    check_common_params(p, q, n, nprime);
    require(abs(n * p * q - m) > 1 && abs(nprime * p * q - m) > 1,
            "obstruction: claim analysis needs |npq - m| > 1 on both slopes");
}

ClaimOutcome impossible(std::string reason) { return ClaimOutcome{std::nullopt, std::move(reason)}; }

std::string kv_int(const Int& v) { return v.get_str(); }

TrailStep step(std::string name, std::string ref,
               std::vector<std::pair<std::string, std::string>> data = {}) {
    return TrailStep{std::move(name), std::move(ref), std::move(data)};
}

/// Exact integer quotient or nothing.
std::optional<Int> exact_quotient(const Int& num, const Int& den) {
    if (den == 0) return std::nullopt;
    if (num % den != 0) return std::nullopt;
    return Int(num / den);
}

}  // namespace

CaseId classify_case(const Int& p, const Int& q, const Int& m, const Int& n,
                     const Int& nprime) {
    check_common_params(p, q, n, nprime);
    Int e = abs(n * p * q - m);
    Int ep = abs(nprime * p * q - m);
    if (e == 0 || ep == 0) return CaseId::Case1;
    if (e == 1 && ep == 1) return CaseId::Case2;
    if (e == 1 || ep == 1) return CaseId::Case3;
    return CaseId::Case4;
}

Claim1Certificate claim1_certificate(const Int& p, const Int& q) {
    check_cable_params(p, q);
    BezoutPair bz = bezout_rs(p, q);
    Claim1Certificate cert;
    cert.p = p;
    cert.q = q;
    cert.r = bz.r;
    cert.s = bz.s;
    cert.residual_c2 = 2 * p;
    cert.residual_h = 2 * bz.s;
    cert.consistent = (cert.residual_c2 == 0 && cert.residual_h == 0);
    // p = 0 would need q = 1; impossible here, so the system never closes.
    require(!cert.consistent, "claim1: matching system unexpectedly consistent");
    return cert;
}

ClaimOutcome claimA_analyze(const Int& p, const Int& q, const Int& m, const Int& n,
                            const Int& nprime) {
    check_case4(p, q, m, n, nprime);
    if (q != 2) return impossible("q must be 2");
    if (n - nprime == -1) {
        return impossible("n - n' = -1 forces |npq - m| = 1, contradicting the case assumption");
    }
    Int e = n * p * q - m;
    Int ep = nprime * p * q - m;
    if (abs(e) != abs(ep)) {
        return impossible("the two surgery pieces have different fiber multiplicities");
    }
    // Here e = -e', so (n + n') p q = 2 m and e = (n - n') p.
    BezoutPair bz = bezout_rs(p, q);
    std::optional<Int> i = exact_quotient(1 - bz.r * e - q * n, q * e);
    std::optional<Int> j = exact_quotient(1 - bz.r * e + q * nprime, q * e);
    if (!i || !j) return impossible("the residue matching has no integer solutions");
    // Solvability pins the difference of the denominators to one.
    require(n - nprime == 1, "claimA: solvable matching must have n - n' = 1");
    require(e == p, "claimA: reconstructed piece parameter must equal p");
    Obligation ob;
    ob.torus_p = -p;
    ob.torus_q = 2;
    ob.lspace_required = true;  // slopes share a sign, so the cable must be L-space
    ob.a2_zero_required = false;
    ob.witness_i = *i;
    ob.witness_j = *j;
    return ClaimOutcome{ob, {}};
}

ClaimOutcome claimB_analyze(const Int& p, const Int& q, const Int& m, const Int& n,
                            const Int& nprime) {
    check_case4(p, q, m, n, nprime);
    if (q != 2) return impossible("q must be 2");
    if (p != 1 && p != -1) return impossible("p must be +-1");
    Int e = n * p * q - m;
    Int ep = nprime * p * q - m;
    if (abs(e) != abs(ep)) {
        return impossible("the two surgery pieces have different fiber multiplicities");
    }
    // e = -e' gives m = (n + n') p and e = (n - n') p, so the second fibers
    // of the piece and the reversed piece agree mod 1 automatically; what
    // remains is recognizing the piece as an oriented torus exterior.
    SeifertPiece piece = surgery_piece(p, q, m, n);
    auto recognized = recognize_torus_exterior(piece);
    if (!recognized) {
        return impossible("the surgery piece is not a torus knot exterior");
    }
    const auto& [P, Q] = *recognized;
    BezoutPair bz = bezout_rs(P, Q);
    // Integer slack of the two fiber matchings: S/P - n/e and S/P - n'/e.
    Rational sp = Rational(bz.s, P);
    Rational vi = sp - Rational(n, e);
    Rational vj = sp - Rational(nprime, e);
    require(vi.is_integer() && vj.is_integer(),
            "claimB: recognized matching must have integer slack");
    Int i = vi.floor();
    Int j = vj.floor();
    require((i - j) * p == -1, "claimB: matching must satisfy (i - j) p = -1");
    Obligation ob;
    ob.torus_p = P;
    ob.torus_q = Q;
    ob.lspace_required = false;
    ob.a2_zero_required = true;
    ob.witness_i = i;
    ob.witness_j = j;
    return ClaimOutcome{ob, {}};
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Obstructed: return "obstructed";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::KnownFamily: return "known_family";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

std::string ObstructionReport::str() const {
    std::ostringstream os;
    os << verdict_str(verdict);
    if (!fired.empty()) os << " (fired: " << fired << ")";
    for (const TrailStep& s : trail) {
        os << "\n  - " << s.step << " [" << s.ref << "]";
        for (const auto& [k, v] : s.data) os << " " << k << "=" << v;
    }
    if (!witnesses.empty()) {
        os << "\n  witnesses:";
        for (const auto& [k, v] : witnesses) os << " " << k << "=" << v;
    }
    return os.str();
}

namespace {

// Case 2: both surgeries descend to the companion; the Casson-Walker
// identity forces a2(K) = 0 while the shared slope sign forces the
// companion to be an L-space knot, whose a2 cannot vanish.
ObstructionReport run_case2(const KnotExpr& companion, const Int& q, const Int& m,
                            ObstructionReport report) {
    Int a2 = a2_of(companion);
    report.trail.push_back(step(
        "companion surgeries", "surgery-trichotomy",
        {{"slopes", m.get_str() + "/(" + q.get_str() + "^2 n) for both denominators"},
         {"slope_orientation",
          "normalized to m > 0, n >= 1; the mirrored configuration follows by "
          "lambda(-M) = -lambda(M)"}}));
    report.trail.push_back(step("casson-walker identity", "dedekind-cancellation",
                                {{"identity", "s(2m+2, m) + s(2m-2, m) = 0"},
                                 {"forces", "8 a2(K) = 0"},
                                 {"a2", kv_int(a2)}}));
    if (a2 != 0) {
        report.verdict = Verdict::Obstructed;
        report.fired = "case2";
        report.trail.push_back(step("contradiction", "casson-walker-identity",
                                    {{"reason", "a2(K) != 0 but the identity forces 0"}}));
        return report;
    }
    if (alexander_available(companion)) {
        LSpaceForm form = lspace_form(alexander_of(companion));
        if (!form.passes) {
            report.verdict = Verdict::Obstructed;
            report.fired = "case2";
            report.trail.push_back(
                step("l-space requirement", "lspace-alexander-form",
                     {{"reason",
                       "same-sign cosmetic slopes force an L-space companion, but the "
                       "declared Alexander polynomial fails the L-space form"}}));
            return report;
        }
    }
    report.verdict = Verdict::Inconclusive;
    report.fired = "case2";
    report.trail.push_back(step("l-space status", "lspace-alexander-form",
                                {{"reason", "a2(K) = 0 and the companion's L-space status "
                                            "is not determined by declared data"}}));
    report.witnesses.emplace_back("a2", "0");
    return report;
}

ObstructionReport run_case3(const KnotExpr& companion, ObstructionReport report) {
    std::string geometry = "undeclared";
    try {
        JsjGraph graph = jsj_graph(companion);
        if (!graph.empty()) {
            geometry = std::holds_alternative<HyperbolicPiece>(graph.back())
                           ? "hyperbolic"
                           : "seifert";
        }
    } catch (const domain_error&) {
        // The conclusion is structural either way; geometry only labels the trail.
    }
    report.verdict = Verdict::Obstructed;
    report.fired = "case3";
    if (geometry == "hyperbolic") {
        report.trail.push_back(
            step("volume comparison", "simplicial-volume",
                 {{"reason", "the filling strictly decreases simplicial volume on the "
                             "companion-surgery side but not on the graph side"}}));
    } else {
        report.trail.push_back(
            step("torus count", "essential-torus-count",
                 {{"reason", "the graph side carries one more essential torus than the "
                             "companion-surgery side"},
                  {"outermost_piece", geometry}}));
    }
    return report;
}

void note_claim(ObstructionReport& report, const char* name, const ClaimOutcome& outcome) {
    if (outcome.impossible()) {
        report.trail.push_back(step(name, "seifert-residue-matching", {{"impossible", outcome.reason}}));
    } else {
        const Obligation& ob = *outcome.obligation;
        report.trail.push_back(step(
            name, "seifert-residue-matching",
            {{"obligation",
              "torus_ext(" + ob.torus_p.get_str() + "," + ob.torus_q.get_str() + ")"},
             {"lspace_required", ob.lspace_required ? "true" : "false"},
             {"a2_zero_required", ob.a2_zero_required ? "true" : "false"},
             {"i", kv_int(ob.witness_i)},
             {"j", kv_int(ob.witness_j)}}));
    }
}

ObstructionReport run_case4(const KnotExpr& companion, const Int& p, const Int& q,
                            const Int& m, const Int& n, const Int& nprime,
                            ObstructionReport report) {
    Claim1Certificate cert = claim1_certificate(p, q);
    report.trail.push_back(
        step("claim1", "fiber-orientation-reversal",
             {{"residual", "2p [c2'] + 2s [h'] = 0 with (p, s) != (0, 0)"},
              {"residual_c2", kv_int(cert.residual_c2)},
              {"residual_h", kv_int(cert.residual_h)},
              {"conclusion", "the surgery piece never matches the reversed piece directly"}}));

    ClaimOutcome a = claimA_analyze(p, q, m, n, nprime);
    ClaimOutcome b = claimB_analyze(p, q, m, n, nprime);
    note_claim(report, "claimA", a);
    note_claim(report, "claimB", b);

    JsjGraph graph = jsj_graph(companion);

    bool route_open = false;
    if (!a.impossible()) {
        const Obligation& ob = *a.obligation;
        bool in_jsj = jsj_contains(graph, TorusPattern::exact(ob.torus_p, ob.torus_q));
        bool refuted = false;
        KnotExpr cable = KnotExpr::cable(p, q, companion);
        if (in_jsj && alexander_available(cable)) {
            LSpaceForm form = lspace_form(alexander_of(cable));
            refuted = !form.passes;
        }
        report.trail.push_back(step(
            "claimA obligation", "jsj-containment",
            {{"piece", "torus_ext(" + ob.torus_p.get_str() + "," + ob.torus_q.get_str() + ")"},
             {"present", in_jsj ? "true" : "false"},
             {"lspace_refuted", refuted ? "true" : "false"}}));
        if (in_jsj && !refuted) {
            route_open = true;
            report.witnesses.emplace_back(
                "claimA", "torus_ext(" + ob.torus_p.get_str() + "," + ob.torus_q.get_str() +
                              ") present; cable must be an L-space knot");
        }
    }
    if (!b.impossible()) {
        const Obligation& ob = *b.obligation;
        bool in_jsj = jsj_contains(graph, TorusPattern::exact(ob.torus_p, ob.torus_q));
        bool a2_zero = false;
        if (in_jsj) a2_zero = (a2_of(companion) == 0);
        report.trail.push_back(step(
            "claimB obligation", "jsj-containment",
            {{"piece", "torus_ext(" + ob.torus_p.get_str() + "," + ob.torus_q.get_str() + ")"},
             {"present", in_jsj ? "true" : "false"},
             {"a2_zero", a2_zero ? "true" : "false"}}));
        if (in_jsj && a2_zero) {
            route_open = true;
            report.witnesses.emplace_back(
                "claimB", "torus_ext(" + ob.torus_p.get_str() + "," + ob.torus_q.get_str() +
                              ") present and a2(K) = 0");
        }
    }

    if (route_open) {
        report.verdict = Verdict::Inconclusive;
        report.fired = "case4";
        return report;
    }
    report.verdict = Verdict::Obstructed;
    report.fired = "case4";
    report.trail.push_back(
        step("iteration", "infinite-jsj-pieces",
             {{"conclusion", "every escape is impossible or its obligation is unmet, so a "
                             "matching would force infinitely many JSJ pieces"}}));
    return report;
}

}  // namespace

ObstructionReport check_pair(const KnotExpr& companion, const Int& p, const Int& q,
                             const Int& m, const Int& n, const Int& nprime) {
    require(!companion.is_trivial(),
            "check_pair: trivial companion (the cable of the unknot is a torus knot; "
            "use check_iterated)");
    require(m > 0, "check_pair: m > 0 violated");
    check_pair_params(p, q, m, n, nprime);

    ObstructionReport report;
    Int hi = n, lo = nprime;
    if (hi < lo) {
        std::swap(hi, lo);
        report.trail.push_back(step("reorder", "unordered-pair",
                                    {{"note", "pair reordered so n > n'"}}));
    }
    CaseId cid = classify_case(p, q, m, hi, lo);
    Int e = hi * p * q - m;
    Int ep = lo * p * q - m;
    report.trail.push_back(step("classify", "surgery-trichotomy",
                                {{"case", std::to_string(static_cast<int>(cid) + 1)},
                                 {"npq-m", kv_int(e)},
                                 {"n'pq-m", kv_int(ep)}}));
    switch (cid) {
        case CaseId::Case1: {
            report.verdict = Verdict::Obstructed;
            report.fired = "case1";
            const Int& zero_side = (e == 0) ? hi : lo;
            report.trail.push_back(step(
                "reducibility", "reducible-vs-irreducible",
                {{"reducible_slope", m.get_str() + "/" + zero_side.get_str()},
                 {"summands", "companion surgery # L(" + q.get_str() + "," + p.get_str() + ")"},
                 {"reason", "a reducible manifold is never homeomorphic to an irreducible one"}}));
            return report;
        }
        case CaseId::Case2:
            return run_case2(companion, q, m, std::move(report));
        case CaseId::Case3:
            return run_case3(companion, std::move(report));
        case CaseId::Case4:
            return run_case4(companion, p, q, m, hi, lo, std::move(report));
    }
    throw domain_error("check_pair: unreachable case");
}

ObstructionReport check_theorem1(const KnotExpr& companion, const Int& p, const Int& q,
                                 MatchMode mode) {
    require(!companion.is_trivial(), "check_theorem1: companion must be non-trivial");
    check_cable_params(p, q);

    ObstructionReport report;
    if (q != 2) {
        report.verdict = Verdict::Obstructed;
        report.fired = "i";
        report.trail.push_back(step("condition i", "case-analysis", {{"q", kv_int(q)}}));
        return report;
    }
    JsjGraph graph = jsj_graph(companion);
    const bool p_unit = (p == 1 || p == -1);
    if (!p_unit) {
        TorusPattern pattern = mode == MatchMode::Oriented
                                   ? TorusPattern::exact(-p, 2)
                                   : TorusPattern::exact_unoriented(-p, 2);
        bool present = jsj_contains(graph, pattern);
        report.trail.push_back(step("condition ii", "jsj-containment",
                                    {{"piece", "torus_ext(" + Int(-p).get_str() + ",2)"},
                                     {"present", present ? "true" : "false"},
                                     {"matching", mode == MatchMode::Oriented
                                                      ? "oriented"
                                                      : "unoriented"}}));
        if (!present) {
            report.verdict = Verdict::Obstructed;
            report.fired = "ii";
            return report;
        }
        report.verdict = Verdict::Inconclusive;
        report.witnesses.emplace_back("jsj", "torus_ext(" + Int(-p).get_str() + ",2) present");
        return report;
    }
    bool any_two = jsj_contains(graph, TorusPattern::any_multiplicity_two());
    report.trail.push_back(step("condition iii", "jsj-containment",
                                {{"piece", "torus_ext(r,2) for any r"},
                                 {"present", any_two ? "true" : "false"}}));
    if (!any_two) {
        report.verdict = Verdict::Obstructed;
        report.fired = "iii";
        return report;
    }
    Int a2 = a2_of(companion);
    report.trail.push_back(step("condition iv", "conway-coefficient", {{"a2", kv_int(a2)}}));
    if (a2 != 0) {
        report.verdict = Verdict::Obstructed;
        report.fired = "iv";
        return report;
    }
    report.verdict = Verdict::Inconclusive;
    report.witnesses.emplace_back("jsj", "a multiplicity-2 torus exterior is present and a2(K) = 0");
    return report;
}

bool hom_sign_check(const std::vector<Int>& ps) {
    if (ps.empty()) return true;
    for (const Int& v : ps) require(v != 0, "hom_sign_check: zero entry");
    int s = sgn(ps.front());
    for (const Int& v : ps) {
        if (sgn(v) != s) return false;
    }
    return true;
}

ObstructionReport check_iterated(const std::vector<std::pair<Int, Int>>& params,
                                 const KnotExpr& base) {
    const bool base_unknot = base.is_trivial();
    const bool base_hyperbolic =
        base.kind() == KnotExpr::Kind::Opaque && base.opaque_data().hyperbolic;
    require(base_unknot || base_hyperbolic,
            "check_iterated: base must be the unknot or a declared hyperbolic knot "
            "(satellite bases are out of scope)");
    for (const auto& [pi, qi] : params) {
        require(qi >= 2, "check_iterated: every cabling level needs q >= 2");
        require(igcd(pi, qi) == 1, "check_iterated: gcd(p_i, q_i) = 1 violated");
    }

    ObstructionReport report;
    if (params.empty()) {
        report.verdict = Verdict::NotApplicable;
        report.fired = "no-cabling";
        report.trail.push_back(step("shape", "input-shape",
                                    {{"reason", "no cabling levels; the knot is not an "
                                                "iterated cable"}}));
        return report;
    }
    if (base_unknot) {
        require(abs(params.front().first) >= 2,
                "check_iterated: |p_1| >= 2 required over the unknot");
    }

    if (params.size() == 1 && base_unknot) {
        const Int& p1 = params.front().first;
        const Int& q1 = params.front().second;
        bool mult_two = (abs(p1) == 2 || q1 == 2);
        if (mult_two) {
            report.verdict = Verdict::KnownFamily;
            report.fired = "family-b";
            report.trail.push_back(step(
                "torus knot", "known-family",
                {{"knot", "torus(" + p1.get_str() + "," + q1.get_str() + ")"},
                 {"family", "slopes 2r^2(2k+1) / (r(2k+1) +- 1) are chirally cosmetic"}}));
            return report;
        }
        report.verdict = Verdict::Obstructed;
        report.fired = "known-classification";
        report.trail.push_back(step(
            "torus knot", "known-classification",
            {{"knot", "torus(" + p1.get_str() + "," + q1.get_str() + ")"},
             {"reason", "the classification of chirally cosmetic surgeries on torus knots "
                        "leaves only multiplicity-2 torus knots"}}));
        return report;
    }

    // Deeper cables or a hyperbolic base.
    report.trail.push_back(step("cases 1-3", "case-analysis",
                                {{"conclusion", "any cosmetic pair must have |npq - m| > 1 "
                                                "on both slopes"}}));
    report.trail.push_back(step("claim1", "fiber-orientation-reversal",
                                {{"conclusion", "the surgery piece maps into the companion "
                                                "exterior"}}));
    const Int& p_last = params.back().first;
    if (base_hyperbolic) {
        report.verdict = Verdict::Obstructed;
        report.fired = "iterated";
        report.trail.push_back(step(
            "innermost piece", "jsj-containment",
            {{"piece", "hyperbolic"},
             {"reason", "no JSJ piece of the exterior is a torus knot exterior, so the "
                        "escape obligations are unmeetable"}}));
        return report;
    }
    // The surgery piece has connected boundary, so it can only match the
    // innermost piece E(T_{p1,q1}); the matching forces q1 = 2, p1 = -p and
    // an L-space iterated torus knot, whose cabling signs must then agree.
    std::vector<Int> signs;
    signs.push_back(-p_last);
    for (std::size_t i = 1; i + 1 < params.size(); ++i) signs.push_back(params[i].first);
    signs.push_back(p_last);
    bool same_sign = hom_sign_check(signs);
    std::ostringstream list;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) list << ",";
        list << signs[i].get_str();
    }
    report.verdict = Verdict::Obstructed;
    report.fired = "iterated";
    report.trail.push_back(step("innermost piece", "seifert-residue-matching",
                                {{"piece", "torus_ext(" + params.front().first.get_str() + "," +
                                               params.front().second.get_str() + ")"},
                                 {"forces", "q1 = 2, p1 = -p and an L-space cable"}}));
    report.trail.push_back(step("cabling signs", "lspace-cabling-signs",
                                {{"signs", list.str()},
                                 {"same_sign", same_sign ? "true" : "false"},
                                 {"conclusion", "an L-space iterated torus knot needs all "
                                                "cabling signs equal; -p and p differ"}}));
    require(!same_sign, "check_iterated: sign list unexpectedly uniform");
    return report;
}

}  // namespace cosmetry
