#include "cli.hpp"

#include <cosmetry/alexander.hpp>
#include <cosmetry/casson_walker.hpp>
#include <cosmetry/dedekind.hpp>
#include <cosmetry/json_io.hpp>
#include <cosmetry/obstruction.hpp>
#include <cosmetry/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>

namespace cosmetry::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    unsigned threads = 1;
    std::string knot;
    std::string p, q, m, n, nprime, r;
    long kmax = 0;
    long mmax = 0;
    long nmax = 0;
    std::vector<std::string> positionals;
    bool unoriented = false;
};

Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw domain_error(std::string(what) + ": integer expected, got '" + text + "'");
    }
}

Slope parse_slope_arg(const std::string& text, std::ostream& err) {
    if (text == "inf" || text == "infinity") return Slope::infinity();
    auto slash = text.find('/');
    Int m = parse_int(slash == std::string::npos ? text : text.substr(0, slash), "slope");
    Int n = slash == std::string::npos ? Int(1) : parse_int(text.substr(slash + 1), "slope");
    Slope s = reduce_slope(m, n);
    if (s.m() != m || s.n() != n) {
        err << "note: slope " << m.get_str() << "/" << n.get_str() << " reduced to "
            << s.str() << "\n";
    }
    return s;
}

/// Iterated-cable parameters: "(p1,q1),(p2,q2)" or "p1,q1;p2,q2".
std::vector<std::pair<Int, Int>> parse_params(std::string text) {
    std::vector<std::pair<Int, Int>> params;
    std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    std::string normalized;
    for (char c : text) {
        if (c == '(' || c == ')') continue;
        normalized += c;
    }
    // Levels are separated by ';' or by the ',' between closing and opening
    // parentheses, which the erasure above turns into every odd comma.
    std::vector<Int> numbers;
    std::string current;
    for (char c : normalized + ",") {
        if (c == ',' || c == ';') {
            if (!current.empty()) numbers.push_back(parse_int(current, "cabling parameter"));
            current.clear();
        } else {
            current += c;
        }
    }
    require(!numbers.empty() && numbers.size() % 2 == 0,
            "check-iterated: parameters must be (p1,q1),(p2,q2),... pairs");
    for (std::size_t i = 0; i < numbers.size(); i += 2) {
        params.emplace_back(numbers[i], numbers[i + 1]);
    }
    return params;
}

void print_lspace(const LSpaceForm& form, bool as_json, std::ostream& out) {
    if (as_json) {
        json j;
        j["passes"] = form.passes;
        j["exponents"] = form.exponents;
        out << j.dump() << "\n";
        return;
    }
    if (!form.passes) {
        out << "fails\n";
        return;
    }
    out << "passes, exponents [";
    for (std::size_t i = 0; i < form.exponents.size(); ++i) {
        if (i) out << ",";
        out << form.exponents[i];
    }
    out << "]\n";
}

int dispatch(const std::string& command, Options& opt, std::ostream& out, std::ostream& err) {
    if (command == "dedekind") {
        require(opt.positionals.size() == 2, "dedekind: expected two arguments a b");
        Rational s = dedekind(parse_int(opt.positionals[0], "a"),
                              parse_int(opt.positionals[1], "b"));
        if (opt.json) {
            out << json{{"dedekind", s.str()}}.dump() << "\n";
        } else {
            out << s.str() << "\n";
        }
        return 0;
    }
    if (command == "alexander") {
        LaurentPoly f = alexander_of(parse_knot(opt.knot));
        if (opt.json) {
            out << json{{"alexander", f.str()}}.dump() << "\n";
        } else {
            out << f.str() << "\n";
        }
        return 0;
    }
    if (command == "a2") {
        Int v = a2_of(parse_knot(opt.knot));
        if (opt.json) {
            out << json{{"a2", v.get_str()}}.dump() << "\n";
        } else {
            out << v.get_str() << "\n";
        }
        return 0;
    }
    if (command == "lspace") {
        print_lspace(lspace_form(alexander_of(parse_knot(opt.knot))), opt.json, out);
        return 0;
    }
    if (command == "cw") {
        Int a2;
        std::string slope_text;
        if (!opt.knot.empty()) {
            require(opt.positionals.size() == 1, "cw: expected one slope argument");
            a2 = a2_of(parse_knot(opt.knot));
            slope_text = opt.positionals[0];
        } else {
            require(opt.positionals.size() == 2, "cw: expected arguments a2 slope (or --knot and slope)");
            a2 = parse_int(opt.positionals[0], "a2");
            slope_text = opt.positionals[1];
        }
        Rational lambda = casson_walker(a2, parse_slope_arg(slope_text, err));
        if (opt.json) {
            out << json{{"casson_walker", lambda.str()}}.dump() << "\n";
        } else {
            out << lambda.str() << "\n";
        }
        return 0;
    }
    if (command == "cable-surgery") {
        require(opt.positionals.size() == 1, "cable-surgery: expected one slope argument");
        SurgeryDescription d =
            describe_cable_surgery(parse_int(opt.p, "-p"), parse_int(opt.q, "-q"),
                                   parse_slope_arg(opt.positionals[0], err));
        if (opt.json) {
            out << to_json(d) << "\n";
        } else if (const auto* rs = std::get_if<ReducibleSum>(&d)) {
            out << "reducible sum: companion surgery " << rs->companion_slope.str()
                << " # L(" << rs->lens_q.get_str() << "," << rs->lens_p.get_str() << ")\n";
        } else if (const auto* cs = std::get_if<CompanionSurgery>(&d)) {
            out << "companion surgery: " << cs->slope.str() << "\n";
        } else {
            const auto& g = std::get<GraphPiece>(d);
            out << "graph manifold: " << g.exterior_label << " glued to " << g.piece.str()
                << "\n";
        }
        return 0;
    }
    if (command == "check-pair") {
        ObstructionReport report = check_pair(
            parse_knot(opt.knot), parse_int(opt.p, "-p"), parse_int(opt.q, "-q"),
            parse_int(opt.m, "-m"), parse_int(opt.n, "-n"), parse_int(opt.nprime, "--nprime"));
        out << (opt.json ? to_json(report) : report.str()) << "\n";
        return 0;
    }
    if (command == "check-theorem") {
        ObstructionReport report = check_theorem1(
            parse_knot(opt.knot), parse_int(opt.p, "-p"), parse_int(opt.q, "-q"),
            opt.unoriented ? MatchMode::Unoriented : MatchMode::Oriented);
        out << (opt.json ? to_json(report) : report.str()) << "\n";
        return 0;
    }
    if (command == "check-iterated") {
        require(opt.positionals.size() == 1,
                "check-iterated: expected one (p1,q1),(p2,q2),... argument");
        KnotExpr base = opt.knot.empty() ? KnotExpr::unknot() : parse_knot(opt.knot);
        ObstructionReport report = check_iterated(parse_params(opt.positionals[0]), base);
        out << (opt.json ? to_json(report) : report.str()) << "\n";
        return 0;
    }
    if (command == "family-b") {
        require(opt.positionals.size() == 1, "family-b: expected one argument k");
        auto [plus, minus] =
            family_b_pair(parse_int(opt.r, "-r"), parse_int(opt.positionals[0], "k"));
        if (opt.json) {
            out << json{{"plus", plus.str()}, {"minus", minus.str()}}.dump() << "\n";
        } else {
            out << plus.str() << " " << minus.str() << "\n";
        }
        return 0;
    }
    if (command == "search") {
        std::vector<CandidatePair> found =
            enumerate_candidates(parse_knot(opt.knot), opt.mmax, opt.nmax, opt.threads);
        if (opt.json) {
            for (const CandidatePair& c : found) out << to_json_line(c) << "\n";
            out << json{{"summary",
                         json{{"candidates", found.size()},
                              {"mmax", opt.mmax},
                              {"nmax", opt.nmax},
                              {"knot", opt.knot}}}}
                       .dump()
                << "\n";
        } else {
            for (const CandidatePair& c : found) {
                out << c.m.get_str() << "/" << c.n.get_str() << " ~ " << c.m.get_str() << "/"
                    << c.nprime.get_str();
                if (c.family_b) {
                    out << "  [family b: r=" << c.family_b->first.get_str()
                        << " k=" << c.family_b->second.get_str() << "]";
                }
                out << "\n";
            }
            out << "candidates (necessary conditions passed): " << found.size() << "\n";
        }
        return 0;
    }
    if (command == "verify-family-b") {
        bool ok = verify_family_b(parse_int(opt.r, "-r"), opt.kmax);
        long total = opt.kmax + 1;
        if (opt.json) {
            out << json{{"ok", ok}, {"pairs", total}}.dump() << "\n";
        } else if (ok) {
            out << "OK: " << total << "/" << total << " pairs pass\n";
        } else {
            out << "FAIL: family identity violated\n";
        }
        return ok ? 0 : 1;
    }
    err << "error: unknown command '" << command << "'\n";
    return 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact knot and surgery invariants with chirally cosmetic "
                 "surgery obstructions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool knot_required = false) {
        sub->add_flag("--json", opt.json, "emit JSON instead of text");
        auto* k = sub->add_option("--knot", opt.knot, "knot expression, e.g. \"cable(3,2; torus(2,3))\"");
        if (knot_required) k->required();
        return sub;
    };

    auto* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind sum s(a, b)");
    dedekind_cmd->add_option("args", opt.positionals, "a b")->expected(2);
    dedekind_cmd->add_flag("--json", opt.json, "emit JSON instead of text");

    add_common(app.add_subcommand("alexander", "Alexander polynomial of a knot"), true);
    add_common(app.add_subcommand("a2", "Conway z^2 coefficient of a knot"), true);
    add_common(app.add_subcommand("lspace", "L-space Alexander form test"), true);

    auto* cw_cmd = add_common(app.add_subcommand("cw", "Casson-Walker invariant of a surgery"));
    cw_cmd->add_option("args", opt.positionals, "[a2] slope")->expected(-1);

    auto* surgery_cmd = app.add_subcommand("cable-surgery", "Describe surgery on a (p,q)-cable");
    surgery_cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    surgery_cmd->add_option("-p", opt.p, "cable parameter p")->required();
    surgery_cmd->add_option("-q", opt.q, "cable parameter q")->required();
    surgery_cmd->add_option("slope", opt.positionals, "surgery slope m/n")->expected(1);

    auto* pair_cmd = add_common(app.add_subcommand("check-pair",
                                                   "Obstruct a chirally cosmetic slope pair"),
                                true);
    pair_cmd->add_option("-p", opt.p, "cable parameter p")->required();
    pair_cmd->add_option("-q", opt.q, "cable parameter q")->required();
    pair_cmd->add_option("-m", opt.m, "shared slope numerator")->required();
    pair_cmd->add_option("-n", opt.n, "first slope denominator")->required();
    pair_cmd->add_option("--nprime", opt.nprime, "second slope denominator")->required();

    auto* thm_cmd = add_common(app.add_subcommand("check-theorem",
                                                  "Slope-independent cable obstructions"),
                               true);
    thm_cmd->add_option("-p", opt.p, "cable parameter p")->required();
    thm_cmd->add_option("-q", opt.q, "cable parameter q")->required();
    thm_cmd->add_flag("--unoriented", opt.unoriented,
                      "conservative mirror-insensitive JSJ matching");

    auto* iter_cmd = add_common(app.add_subcommand("check-iterated",
                                                   "Obstructions for iterated cables"));
    iter_cmd->add_option("params", opt.positionals, "(p1,q1),(p2,q2),...")->expected(1);

    auto* fam_cmd = app.add_subcommand("family-b", "Known chirally cosmetic slope pair");
    fam_cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    fam_cmd->add_option("-r", opt.r, "odd torus parameter, |r| >= 3")->required();
    fam_cmd->add_option("k", opt.positionals, "family index k >= 0")->expected(1);

    auto* search_cmd = add_common(app.add_subcommand("search",
                                                     "Enumerate candidate slope pairs"),
                                  true);
    search_cmd->add_option("--mmax", opt.mmax, "largest slope numerator")->required();
    search_cmd->add_option("--nmax", opt.nmax, "largest slope denominator")->required();
    search_cmd->add_option("--threads", opt.threads, "worker count for the enumeration");

    auto* verify_cmd = app.add_subcommand("verify-family-b", "Check the family identity");
    verify_cmd->add_flag("--json", opt.json, "emit JSON instead of text");
    verify_cmd->add_option("-r", opt.r, "odd torus parameter, |r| >= 3")->required();
    verify_cmd->add_option("--kmax", opt.kmax, "check k = 0..kmax")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        return dispatch(app.get_subcommands().front()->get_name(), opt, out, err);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cosmetry::cli
