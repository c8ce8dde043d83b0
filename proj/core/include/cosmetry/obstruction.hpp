#pragma once

#include <cosmetry/alexander.hpp>
#include <cosmetry/cable_surgery.hpp>
#include <cosmetry/knot.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cosmetry {

/// The four cases of a slope pair (m/n, m/n') on a (p,q)-cable, split on
/// (|npq - m|, |n'pq - m|): Case1 has a zero, Case2 both one, Case3 one
/// and greater, Case4 both greater.
enum class CaseId { Case1, Case2, Case3, Case4 };

CaseId classify_case(const Int& p, const Int& q, const Int& m, const Int& n,
                     const Int& nprime);

/// Certificate that an orientation-reversing homeomorphism between the two
/// surgery pieces cannot match the outer bases directly: writing
/// f([M]) = -[M'], f([L]) = [L'], f([h]) = -[h'] in section bases forces
/// f([c2]) = -[c2'] and then 2p[c2'] + 2s[h'] = 0, which fails because
/// (p, s) != (0, 0). The certificate is always inconsistent.
struct Claim1Certificate {
    Int p, q, r, s;
    Int residual_c2;  // 2p, must vanish for a direct matching
    Int residual_h;   // 2s
    bool consistent;  // always false
};

Claim1Certificate claim1_certificate(const Int& p, const Int& q);

/// Escape route derived by a claim analysis: the companion exterior would
/// have to contain the oriented torus exterior E(T_{p,q}) as a JSJ piece,
/// possibly with additional invariant requirements on the cable or the
/// companion.
struct Obligation {
    Int torus_p;
    Int torus_q;
    bool lspace_required = false;   // the cable must be an L-space knot
    bool a2_zero_required = false;  // the companion must have a2 = 0
    Int witness_i;                  // integer slack of the residue matching
    Int witness_j;
};

struct ClaimOutcome {
    std::optional<Obligation> obligation;
    std::string reason;  // set when impossible
    bool impossible() const { return !obligation.has_value(); }
};

/// Matching analysis for an escape through a piece homeomorphic to the
/// reversed surgery piece (same-orientation comparison of the two pieces).
/// Solvable matchings force q = 2 and n - n' = 1 and yield the obligation
/// E(T_{-p,2}) together with the L-space requirement on the cable.
ClaimOutcome claimA_analyze(const Int& p, const Int& q, const Int& m, const Int& n,
                            const Int& nprime);

/// Matching analysis for an escape through a piece homeomorphic to the
/// surgery piece itself (orientation-reversed comparison of the two
/// pieces). Solvable matchings force q = 2, p = +-1 and yield the
/// obligation E(T_{P,2}) with |P| = |n - n'| together with a2 = 0 on the
/// companion.
ClaimOutcome claimB_analyze(const Int& p, const Int& q, const Int& m, const Int& n,
                            const Int& nprime);

enum class Verdict { Obstructed, Inconclusive, KnownFamily, NotApplicable };

std::string verdict_str(Verdict v);

struct TrailStep {
    std::string step;
    std::string ref;
    std::vector<std::pair<std::string, std::string>> data;
};

/// Structured verdict: which case or condition fired, the derivation
/// trail, and any witnesses (for example the JSJ piece that kept an
/// escape route open).
struct ObstructionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string fired;
    std::vector<TrailStep> trail;
    std::vector<std::pair<std::string, std::string>> witnesses;

    std::string str() const;
};

/// Decides whether the pair (m/n, m/n') on the (p,q)-cable of the
/// non-trivial companion K can be chirally cosmetic. Obstructed means the
/// case analysis closes every escape; Inconclusive means some obligation
/// is met by K and no existence claim is made either way. The pair is
/// unordered: inputs are canonicalized to n > n'.
ObstructionReport check_pair(const KnotExpr& companion, const Int& p, const Int& q,
                             const Int& m, const Int& n, const Int& nprime);

/// How torus exterior obligations are matched against the JSJ graph.
/// Oriented matching follows the derivation; Unoriented is a conservative
/// mode that treats mirror pieces as equal (fewer Obstructed verdicts).
enum class MatchMode { Oriented, Unoriented };

/// Decides the slope-independent conditions (i)-(iv) for the (p,q)-cable
/// of K: (i) q != 2; (ii) q = 2, p != +-1, no E(T_{-p,2}) JSJ piece;
/// (iii) q = 2, p = +-1, no E(T_{r,2}) piece for any r; (iv) q = 2,
/// p = +-1, a2(K) != 0. Any one of them obstructs every slope pair.
ObstructionReport check_theorem1(const KnotExpr& companion, const Int& p, const Int& q,
                                 MatchMode mode = MatchMode::Oriented);

/// True iff all entries share one sign. Empty lists pass vacuously; zero
/// entries are rejected.
bool hom_sign_check(const std::vector<Int>& ps);

/// Decides chirally cosmetic surgery for the iterated cable of a
/// non-satellite base (unknot or declared hyperbolic). One cabling level
/// over the unknot is a torus knot: (2,r)-torus knots carry the known
/// family, other torus knots are settled by the known classification.
/// Deeper cables and hyperbolic bases are always obstructed.
ObstructionReport check_iterated(const std::vector<std::pair<Int, Int>>& params,
                                 const KnotExpr& base);

}  // namespace cosmetry
