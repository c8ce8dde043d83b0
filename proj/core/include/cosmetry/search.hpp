#pragma once

#include <cosmetry/knot.hpp>
#include <cosmetry/slope.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cosmetry {

/// A slope pair that survived every implemented necessary condition.
/// Survivors are candidates only; the filters are necessary, never
/// sufficient, so nothing here is ever labelled chirally cosmetic.
struct CandidatePair {
    Int m;
    Int n;
    Int nprime;
    std::vector<std::string> passed;
    std::optional<std::pair<Int, Int>> family_b;  // (r, k) when the pair is a family member
};

/// The known chirally cosmetic family on multiplicity-2 torus knots:
/// slopes 2r^2(2k+1) / (r(2k+1) + 1) and 2r^2(2k+1) / (r(2k+1) - 1),
/// both reducing by exactly 2. Requires odd |r| >= 3 and k >= 0.
std::pair<Slope, Slope> family_b_pair(const Int& r, const Int& k);

/// Enumerates every pair 1 <= m <= m_max, 1 <= n' < n <= n_max with both
/// denominators coprime to m that passes the homology and Casson-Walker
/// filters for the given knot. Pairs are annotated with their family (b)
/// parameters when the knot is a multiplicity-2 torus knot. Output is
/// sorted by (m, n, n') and is identical for any worker count.
std::vector<CandidatePair> enumerate_candidates(const KnotExpr& knot, long m_max,
                                                long n_max, unsigned threads = 1);

/// Checks the Casson-Walker pair condition on every family (b) pair with
/// 0 <= k <= k_max, using a2 computed from the torus knot itself.
bool verify_family_b(const Int& r, long k_max);

}  // namespace cosmetry
